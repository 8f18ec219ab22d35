#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flagcert/small_graph.hpp"
#include "flagcert/three_graph.hpp"

namespace flagcert {

/// Result of a canonical-labelling search on a SmallGraph.
struct CanonicalLabelling {
  Code128 code = 0;                      ///< code() of the canonical relabelling
  std::array<std::int8_t, 16> order{};   ///< order[p] = original vertex placed at position p
};

/// Lexicographically minimal relabelling of `g` over all permutations that
/// keep vertices 0..fixed-1 in place.
///
/// Minimality is with respect to the sorted edge sequence; among graphs with
/// the same edge count that is the same as maximising code(). The search
/// individualises positions in order and, after placing position b, splits
/// every later cell by adjacency to the pair at positions (0, b); the bits of
/// triple block (0, b) are then forced, which gives an exact prefix to prune on.
CanonicalLabelling canonical_labelling(const SmallGraph& g, int fixed = 0);

/// A graph that is lexicographically minimal within its isomorphism class.
struct CanonicalForm {
  ThreeGraph graph;
  std::vector<int> labelling;  ///< labelling[v-1] = label of v in `graph`

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.graph == b.graph;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return compare_graphs(a.graph, b.graph);
  }
};

/// Throws CostGuardError for graphs with more than kMaxCanonicalOrder vertices.
CanonicalForm canonical_form(const ThreeGraph& g);

bool are_isomorphic(const ThreeGraph& g1, const ThreeGraph& g2);

/// Canonical code of a small graph (n <= 9), used as a hash key.
inline Code128 canonical_code(const SmallGraph& g) { return canonical_labelling(g).code; }

}  // namespace flagcert
