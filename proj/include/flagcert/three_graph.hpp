#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace flagcert {

/// An unordered vertex triple stored sorted, a < b < c, 1-based labels.
struct Triple {
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  std::uint16_t c = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Sorts the three labels; throws InputError if two coincide or one is < 1.
Triple make_triple(int x, int y, int z);

/// A 3-uniform hypergraph on vertices 1..n.
///
/// The edge list is kept strictly increasing in lexicographic order, so two
/// ThreeGraphs compare equal exactly when they are the same labelled graph.
class ThreeGraph {
 public:
  ThreeGraph() = default;
  explicit ThreeGraph(int n);
  ThreeGraph(int n, std::vector<Triple> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Triple> edges() const noexcept { return edges_; }

  bool has_edge(int x, int y, int z) const;
  int codegree(int x, int y) const;

  friend bool operator==(const ThreeGraph&, const ThreeGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
};

/// Total order used for graph lists: vertex count, then edge count, then the
/// flattened edge sequence compared lexicographically.
std::strong_ordering compare_graphs(const ThreeGraph& lhs, const ThreeGraph& rhs);

/// Restricts `g` to `vertices`, relabelling vertices[i] as i+1.
ThreeGraph induced_subgraph(const ThreeGraph& g, std::span<const int> vertices);

/// Applies a relabelling: vertex v becomes new_label[v-1]. new_label must be a
/// permutation of 1..n.
ThreeGraph relabel(const ThreeGraph& g, std::span<const int> new_label);

/// True iff no four vertices span three or more edges.
bool is_k4minus_free(const ThreeGraph& g);

/// Minimum codegree over all vertex pairs (0 when n < 2).
int min_codegree(const ThreeGraph& g);

/// Link graph of `v` as a list of pairs (x, y), x < y.
std::vector<std::pair<int, int>> link_graph(const ThreeGraph& g, int v);

std::string to_string(const ThreeGraph& g);

}  // namespace flagcert
