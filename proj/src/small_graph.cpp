#include "flagcert/small_graph.hpp"

#include "flagcert/errors.hpp"

namespace flagcert {

SmallGraph::SmallGraph(int n) : n_(n) {
  if (n < 0 || n > 16) throw InputError("SmallGraph supports at most 16 vertices");
}

SmallGraph::SmallGraph(const ThreeGraph& g) : SmallGraph(g.order()) {
  for (const Triple& e : g.edges()) add_edge(e.a - 1, e.b - 1, e.c - 1);
}

void SmallGraph::add_edge(int x, int y, int z) noexcept {
  pair_[x * 16 + y] |= static_cast<std::uint16_t>(1u << z);
  pair_[y * 16 + x] |= static_cast<std::uint16_t>(1u << z);
  pair_[x * 16 + z] |= static_cast<std::uint16_t>(1u << y);
  pair_[z * 16 + x] |= static_cast<std::uint16_t>(1u << y);
  pair_[y * 16 + z] |= static_cast<std::uint16_t>(1u << x);
  pair_[z * 16 + y] |= static_cast<std::uint16_t>(1u << x);
}

SmallGraph SmallGraph::induced(const int* vertices, int count) const noexcept {
  SmallGraph out;
  out.n_ = count;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const std::uint16_t m = common(vertices[i], vertices[j]);
      if (m == 0) continue;
      std::uint16_t packed = 0;
      for (int k = 0; k < count; ++k) {
        if ((m >> vertices[k]) & 1u) packed |= static_cast<std::uint16_t>(1u << k);
      }
      out.pair_[i * 16 + j] = packed;
      out.pair_[j * 16 + i] = packed;
    }
  }
  return out;
}

Code128 SmallGraph::code() const noexcept {
  Code128 bits = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      const std::uint16_t m = common(a, b);
      for (int c = b + 1; c < n_; ++c) bits = (bits << 1) | ((m >> c) & 1u);
    }
  }
  return bits;
}

SmallGraph SmallGraph::from_code(int n, Code128 code) {
  SmallGraph g(n);
  int shift = triple_count(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        --shift;
        if ((code >> shift) & 1u) g.add_edge(a, b, c);
      }
    }
  }
  return g;
}

ThreeGraph SmallGraph::to_three_graph() const {
  std::vector<Triple> edges;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      const std::uint16_t m = common(a, b);
      for (int c = b + 1; c < n_; ++c) {
        if ((m >> c) & 1u) {
          edges.push_back(Triple{static_cast<std::uint16_t>(a + 1), static_cast<std::uint16_t>(b + 1),
                                 static_cast<std::uint16_t>(c + 1)});
        }
      }
    }
  }
  return ThreeGraph(n_, std::move(edges));
}

}  // namespace flagcert
