#pragma once

// Test-side oracles. Nothing here calls the library code it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "flagcert/expressions.hpp"
#include "flagcert/three_graph.hpp"
#include "flagcert/tournament.hpp"

namespace testing {

using flagcert::ThreeGraph;
using flagcert::Triple;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// One shared context per test binary so tables are built once.
inline flagcert::ProofContext& context() {
  static flagcert::ProofContext ctx;
  return ctx;
}

inline std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back(flagcert::make_triple(a, b, c));
  return out;
}

// Dense adjacency over 1-based labels, filled straight from the edge list.
class EdgeTable {
 public:
  explicit EdgeTable(const ThreeGraph& g) : n_(g.order()), bits_((n_ + 1) * (n_ + 1) * (n_ + 1), 0) {
    for (const Triple& e : g.edges()) {
      const int v[3] = {e.a, e.b, e.c};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            if (i != j && j != k && i != k) bits_[index(v[i], v[j], v[k])] = 1;
    }
  }
  bool operator()(int x, int y, int z) const { return bits_[index(x, y, z)] != 0; }

 private:
  std::size_t index(int x, int y, int z) const { return (static_cast<std::size_t>(x) * (n_ + 1) + y) * (n_ + 1) + z; }
  int n_;
  std::vector<std::uint8_t> bits_;
};

inline bool brute_k4minus_free(const ThreeGraph& g) {
  const EdgeTable e(g);
  const int n = g.order();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (e(a, b, c) + e(a, b, d) + e(a, c, d) + e(b, c, d) >= 3) return false;
  return true;
}

inline int brute_min_codegree(const ThreeGraph& g) {
  const EdgeTable e(g);
  const int n = g.order();
  int best = n < 2 ? 0 : n;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) {
      int d = 0;
      for (int z = 1; z <= n; ++z)
        if (z != x && z != y && e(x, y, z)) ++d;
      best = std::min(best, d);
    }
  return best;
}

// perm[v-1] = new label of v.
inline ThreeGraph permuted(const ThreeGraph& g, const std::vector<int>& perm) {
  std::vector<Triple> edges;
  for (const Triple& e : g.edges()) edges.push_back(flagcert::make_triple(perm[e.a - 1], perm[e.b - 1], perm[e.c - 1]));
  return ThreeGraph(g.order(), std::move(edges));
}

inline std::vector<int> random_permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

// Smallest edge bitmask (over the triple list of all_triples) among all
// relabellings: an isomorphism key by exhaustive search, n <= 7.
inline std::uint64_t brute_iso_key(const ThreeGraph& g) {
  const int n = g.order();
  std::vector<int> index((n + 1) * (n + 1) * (n + 1), -1);
  int t = 0;
  for (const Triple& e : all_triples(n)) index[(e.a * (n + 1) + e.b) * (n + 1) + e.c] = t++;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (const Triple& e : g.edges()) {
      int v[3] = {perm[e.a - 1], perm[e.b - 1], perm[e.c - 1]};
      std::sort(v, v + 3);
      mask |= std::uint64_t{1} << index[(v[0] * (n + 1) + v[1]) * (n + 1) + v[2]];
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Adds random triples while the graph stays K4^- -free.
inline ThreeGraph random_k4minus_free(int n, int attempts) {
  std::vector<Triple> pool = all_triples(n);
  std::shuffle(pool.begin(), pool.end(), rng());
  std::vector<Triple> edges;
  for (int k = 0; k < attempts && k < static_cast<int>(pool.size()); ++k) {
    edges.push_back(pool[static_cast<std::size_t>(k)]);
    if (!brute_k4minus_free(ThreeGraph(n, edges))) edges.pop_back();
  }
  return ThreeGraph(n, std::move(edges));
}

inline flagcert::Tournament random_tournament(int n) {
  flagcert::Tournament t(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (uniform(0, 1)) t.set_arc(y, x);
  return t;
}

inline int brute_cyclic_triangles(const flagcert::Tournament& t) {
  int count = 0;
  for (int x = 0; x < t.order(); ++x)
    for (int y = x + 1; y < t.order(); ++y)
      for (int z = y + 1; z < t.order(); ++z) {
        const bool xy = t.arc(x, y), yz = t.arc(y, z), zx = t.arc(z, x);
        if (xy == yz && yz == zx) ++count;
      }
  return count;
}

}  // namespace testing
