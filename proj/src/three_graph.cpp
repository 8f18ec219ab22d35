#include "flagcert/three_graph.hpp"

#include <algorithm>
#include <sstream>

#include "flagcert/errors.hpp"

namespace flagcert {

Triple make_triple(int x, int y, int z) {
  int v[3] = {x, y, z};
  std::sort(v, v + 3);
  if (v[0] < 1 || v[0] == v[1] || v[1] == v[2]) {
    throw InputError("triple must have three distinct positive vertices");
  }
  if (v[2] > 0xFFFF) throw InputError("vertex label out of range");
  return Triple{static_cast<std::uint16_t>(v[0]), static_cast<std::uint16_t>(v[1]),
                static_cast<std::uint16_t>(v[2])};
}

ThreeGraph::ThreeGraph(int n) : n_(n) {
  if (n < 0 || n > 0xFFFF) throw InputError("vertex count out of range");
}

ThreeGraph::ThreeGraph(int n, std::vector<Triple> edges) : ThreeGraph(n) {
  for (const Triple& e : edges) {
    if (!(e.a >= 1 && e.a < e.b && e.b < e.c && e.c <= n)) {
      throw InputError("edge " + std::to_string(e.a) + std::to_string(e.b) +
                       std::to_string(e.c) + " is not a sorted triple within 1.." +
                       std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate edge");
  }
  edges_ = std::move(edges);
}

bool ThreeGraph::has_edge(int x, int y, int z) const {
  if (x == y || y == z || x == z) return false;
  const Triple t = make_triple(x, y, z);
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

int ThreeGraph::codegree(int x, int y) const {
  int count = 0;
  for (const Triple& e : edges_) {
    const bool hx = e.a == x || e.b == x || e.c == x;
    const bool hy = e.a == y || e.b == y || e.c == y;
    count += (hx && hy) ? 1 : 0;
  }
  return count;
}

std::strong_ordering compare_graphs(const ThreeGraph& lhs, const ThreeGraph& rhs) {
  if (auto c = lhs.order() <=> rhs.order(); c != 0) return c;
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.edges().begin(), lhs.edges().end(),
                                                rhs.edges().begin(), rhs.edges().end());
}

ThreeGraph induced_subgraph(const ThreeGraph& g, std::span<const int> vertices) {
  std::vector<int> position(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 1 || v > g.order()) throw InputError("vertex out of range in induced_subgraph");
    if (position[v] != 0) throw InputError("duplicate vertex in induced_subgraph");
    position[v] = static_cast<int>(i) + 1;
  }
  std::vector<Triple> edges;
  for (const Triple& e : g.edges()) {
    const int pa = position[e.a], pb = position[e.b], pc = position[e.c];
    if (pa && pb && pc) edges.push_back(make_triple(pa, pb, pc));
  }
  return ThreeGraph(static_cast<int>(vertices.size()), std::move(edges));
}

ThreeGraph relabel(const ThreeGraph& g, std::span<const int> new_label) {
  if (static_cast<int>(new_label.size()) != g.order()) {
    throw InputError("relabelling has wrong length");
  }
  std::vector<bool> seen(new_label.size() + 1, false);
  for (int l : new_label) {
    if (l < 1 || l > g.order() || seen[l]) throw InputError("relabelling is not a permutation");
    seen[l] = true;
  }
  std::vector<Triple> edges;
  edges.reserve(g.size());
  for (const Triple& e : g.edges()) {
    edges.push_back(make_triple(new_label[e.a - 1], new_label[e.b - 1], new_label[e.c - 1]));
  }
  return ThreeGraph(g.order(), std::move(edges));
}

namespace {

// Per-pair neighbourhoods as sorted vertex lists, indexed by (x-1)*n + (y-1).
std::vector<std::vector<int>> pair_neighbourhoods(const ThreeGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n) * n);
  auto add = [&](int x, int y, int z) { nbr[(x - 1) * n + (y - 1)].push_back(z); };
  for (const Triple& e : g.edges()) {
    add(e.a, e.b, e.c);
    add(e.a, e.c, e.b);
    add(e.b, e.c, e.a);
  }
  for (auto& list : nbr) std::sort(list.begin(), list.end());
  return nbr;
}

}  // namespace

bool is_k4minus_free(const ThreeGraph& g) {
  // Any three edges on four vertices pairwise share two vertices, so a K4-
  // contains two edges xyc, xyd through a common pair plus xcd or ycd.
  const int n = g.order();
  const auto nbr = pair_neighbourhoods(g);
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      const auto& common = nbr[(x - 1) * n + (y - 1)];
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const int c = common[i], d = common[j];
          const auto& xc = nbr[(std::min(x, c) - 1) * n + (std::max(x, c) - 1)];
          const auto& yc = nbr[(std::min(y, c) - 1) * n + (std::max(y, c) - 1)];
          if (std::binary_search(xc.begin(), xc.end(), d) ||
              std::binary_search(yc.begin(), yc.end(), d)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

int min_codegree(const ThreeGraph& g) {
  const int n = g.order();
  if (n < 2) return 0;
  std::vector<int> codeg(static_cast<std::size_t>(n) * n, 0);
  for (const Triple& e : g.edges()) {
    ++codeg[(e.a - 1) * n + (e.b - 1)];
    ++codeg[(e.a - 1) * n + (e.c - 1)];
    ++codeg[(e.b - 1) * n + (e.c - 1)];
  }
  int best = static_cast<int>(g.size()) + 1;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) best = std::min(best, codeg[x * n + y]);
  }
  return best;
}

std::vector<std::pair<int, int>> link_graph(const ThreeGraph& g, int v) {
  std::vector<std::pair<int, int>> link;
  for (const Triple& e : g.edges()) {
    if (e.a == v) link.emplace_back(e.b, e.c);
    else if (e.b == v) link.emplace_back(e.a, e.c);
    else if (e.c == v) link.emplace_back(e.a, e.b);
  }
  std::sort(link.begin(), link.end());
  return link;
}

std::string to_string(const ThreeGraph& g) {
  std::ostringstream out;
  out << g.order() << ':';
  bool first = true;
  for (const Triple& e : g.edges()) {
    if (!first) out << ' ';
    out << e.a << ',' << e.b << ',' << e.c;
    first = false;
  }
  return out.str();
}

}  // namespace flagcert
