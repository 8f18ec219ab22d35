#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagcert/canonical.hpp"
#include "flagcert/small_graph.hpp"
#include "flagcert/three_graph.hpp"

namespace flagcert {

inline constexpr int kMaxEnumerationOrder = 7;

struct Code128Hash {
  std::size_t operator()(Code128 c) const noexcept {
    const auto lo = static_cast<std::uint64_t>(c);
    const auto hi = static_cast<std::uint64_t>(c >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ull));
  }
};

/// All K4^- -free 3-graphs on k vertices up to isomorphism, as lexicographically
/// minimal representatives sorted by compare_graphs.
///
/// Every minimal (k-1)-vertex graph is extended by vertex k in every K4^- -free
/// way; each extension is canonicalised and duplicates are dropped. Keeping
/// only extensions that are already minimal is not enough under this order
/// (it finds 5974 of the 8157 graphs at k = 7).
/// Throws InputError for k < 1 and CostGuardError for k > 7.
std::vector<ThreeGraph> enumerate_free(int k);

/// Calls `visit` with every K4^- -free one-vertex extension of `parent`; the
/// new vertex is parent.order().
void for_each_free_extension(const SmallGraph& parent,
                             const std::function<void(const SmallGraph&)>& visit);

/// A canonical graph list with an index from canonical codes to positions.
class GraphBasis {
 public:
  GraphBasis() = default;
  GraphBasis(std::string id, int order, std::vector<ThreeGraph> graphs);

  /// Basis "F<k>": enumerate_free(k).
  static GraphBasis free_graphs(int k);

  const std::string& id() const noexcept { return id_; }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return graphs_.size(); }
  const ThreeGraph& graph(std::size_t i) const { return graphs_.at(i); }
  const SmallGraph& small(std::size_t i) const { return small_.at(i); }
  const std::vector<ThreeGraph>& graphs() const noexcept { return graphs_; }

  /// Position of the isomorphism class of g, or -1 if absent.
  int index_of(const SmallGraph& g) const;
  int index_of_code(Code128 canonical) const;

 private:
  std::string id_;
  int order_ = 0;
  std::vector<ThreeGraph> graphs_;
  std::vector<SmallGraph> small_;
  std::unordered_map<Code128, int, Code128Hash> index_;
};

}  // namespace flagcert
