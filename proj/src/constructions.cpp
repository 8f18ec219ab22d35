#include "flagcert/constructions.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "flagcert/errors.hpp"

namespace flagcert {

ThreeGraph h6() {
  static const std::array<std::array<int, 3>, 10> edges = {
      {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}, {1, 3, 6}, {3, 5, 6}, {2, 5, 6}, {2, 4, 6}, {1, 4, 6}}};
  std::vector<Triple> list;
  for (const auto& e : edges) list.push_back(make_triple(e[0], e[1], e[2]));
  return ThreeGraph(6, std::move(list));
}

std::uint64_t SeedStream::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_tournament: n must be at least 1");
  std::mt19937_64 rng(seed);
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng() >> 63) t.set_arc(i, j);
      else t.set_arc(j, i);
    }
  return t;
}

Tournament delete_vertices(const Tournament& t, const std::vector<int>& vertices) {
  std::vector<bool> gone(static_cast<std::size_t>(t.order()), false);
  for (int v : vertices) {
    if (v < 0 || v >= t.order() || gone[static_cast<std::size_t>(v)]) {
      throw InputError("delete_vertices: bad or repeated vertex " + std::to_string(v));
    }
    gone[static_cast<std::size_t>(v)] = true;
  }
  if (static_cast<int>(vertices.size()) >= t.order()) throw InputError("delete_vertices: must keep a vertex");
  std::vector<int> keep;
  for (int v = 0; v < t.order(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_tournament(t, keep);
}

namespace {

bool is_paley_order(int m) {
  if (m < 3 || m % 4 != 3) return false;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

class Builder {
 public:
  Builder(const BlowupSpec& spec, BlowupResult& out) : spec_(spec), out_(out), seeds_(spec.seed) {}

  void build(const std::vector<int>& vertices, int depth) {
    const int m = static_cast<int>(vertices.size());
    if (depth == 0) {
      leaf(vertices);
      return;
    }
    std::array<std::vector<int>, 6> parts;
    int pos = 0;
    for (int p = 0; p < 6; ++p) {
      const int size = m / 6 + (p < m % 6 ? 1 : 0);
      parts[p].assign(vertices.begin() + pos, vertices.begin() + pos + size);
      pos += size;
    }
    const ThreeGraph pattern = h6();
    for (const Triple& e : pattern.edges()) {
      for (int a : parts[e.a - 1])
        for (int b : parts[e.b - 1])
          for (int c : parts[e.c - 1]) edges_.push_back(make_triple(a, b, c));
    }
    for (const auto& part : parts) build(part, depth - 1);
  }

  std::vector<Triple> take_edges() { return std::move(edges_); }

 private:
  void leaf(const std::vector<int>& vertices) {
    const int m = static_cast<int>(vertices.size());
    const std::uint64_t seed = seeds_.next();
    const Tournament t = spec_.paley && is_paley_order(m) ? paley_tournament(m) : random_tournament(m, seed);
    out_.part_sizes.push_back(m);
    out_.seeds.push_back(seed);
    out_.inner_delta2.push_back(cyclic_codegrees(t).delta2);
    const ThreeGraph inner = ct_construction(t);
    for (const Triple& e : inner.edges())
      edges_.push_back(make_triple(vertices[e.a - 1], vertices[e.b - 1], vertices[e.c - 1]));
  }

  const BlowupSpec& spec_;
  BlowupResult& out_;
  SeedStream seeds_;
  std::vector<Triple> edges_;
};

}  // namespace

BlowupResult iterated_blowup(const BlowupSpec& spec) {
  if (spec.depth < 0) throw InputError("blow-up depth must be non-negative");
  if (spec.n > 200) throw CostGuardError("iterated_blowup: n > 200");
  long parts = 1;
  for (int i = 0; i < spec.depth && parts <= spec.n; ++i) parts *= 6;
  if (spec.n < 1 || spec.n < parts) {
    throw InputError("iterated_blowup: n = " + std::to_string(spec.n) + " is too small for depth " +
                     std::to_string(spec.depth));
  }
  BlowupResult out;
  Builder builder(spec, out);
  std::vector<int> vertices(static_cast<std::size_t>(spec.n));
  for (int v = 0; v < spec.n; ++v) vertices[static_cast<std::size_t>(v)] = v + 1;
  builder.build(vertices, spec.depth);
  out.graph = ThreeGraph(spec.n, builder.take_edges());
  out.edges = out.graph.size();
  out.min_codegree = min_codegree(out.graph);
  const long triples = static_cast<long>(spec.n) * (spec.n - 1) * (spec.n - 2) / 6;
  out.edge_density = triples == 0 ? Rational(0) : Rational(static_cast<long>(out.edges), triples);
  out.edge_density.canonicalize();
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 36, static_cast<unsigned long>(spec.depth));
  out.formula_value = Rational(2, 7) - Rational(Integer(1), power * 28);
  out.formula_value.canonicalize();
  return out;
}

}  // namespace flagcert
