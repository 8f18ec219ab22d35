#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flagcert/enumerate.hpp"
#include "flagcert/rational.hpp"
#include "flagcert/small_graph.hpp"
#include "flagcert/three_graph.hpp"

namespace flagcert {

/// A labelled K4^- -free graph; vertex i of `graph` carries type label i.
struct TypeGraph {
  std::string name;
  ThreeGraph graph;

  int order() const noexcept { return graph.order(); }
};

namespace types {

const TypeGraph& empty();
/// Two labelled vertices, no edges.
const TypeGraph& tau();
/// Four-vertex types with 0, 1 ({123}) and 2 ({123,124}) edges.
const TypeGraph& sigma(int i);
/// The six five-vertex types; see types.cpp for edge lists.
const TypeGraph& iota(int i);

/// "empty", "tau", "sigma0".."sigma2", "iota1".."iota6".
const TypeGraph& by_name(std::string_view name);

/// tau, sigma0..2, iota1..6.
std::vector<const TypeGraph*> proof_types();

}  // namespace types

/// A sigma-flag: `graph` with an ordered copy of the type on `root`.
struct Flag {
  const TypeGraph* type = nullptr;
  ThreeGraph graph;
  std::vector<int> root;  ///< root[i] = vertex of graph carrying type label i+1

  int order() const noexcept { return graph.order(); }
};

/// Validates that root is injective, induces type->graph exactly, and that
/// graph is K4^- -free. Throws InputError otherwise.
Flag make_flag(const TypeGraph& type, ThreeGraph graph, std::vector<int> root);

/// Graph of the flag relabelled so that the root sits on 0..s-1 (in order).
SmallGraph rooted_small_graph(const Flag& f);

/// Isomorphism key of a flag under root-preserving relabelling.
Code128 flag_code(const Flag& f);

/// The same flag with its root labels permuted: new root[i] = root[perm[i]].
Flag permute_root(const Flag& f, const std::vector<int>& perm);

/// "n:<triples>|root=<vertices>", digits 1..9, e.g. "3:123|root=12".
std::string encode_flag(const Flag& f);
Flag decode_flag(const TypeGraph& type, std::string_view text);

/// The k-vertex flags of one type, one per root-preserving isomorphism class,
/// each stored with root 1..s, in compare_graphs order of those graphs.
class FlagBasis {
 public:
  FlagBasis() = default;
  FlagBasis(const TypeGraph& type, int order, std::vector<Flag> flags);

  const TypeGraph& type() const noexcept { return *type_; }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return flags_.size(); }
  const Flag& flag(std::size_t i) const { return flags_.at(i); }
  const std::vector<Flag>& flags() const noexcept { return flags_; }
  std::string id() const { return type_->name + "/" + std::to_string(order_); }

  /// Index of a flag whose root is on vertices 0..s-1 of g, or -1.
  int index_of_rooted(const SmallGraph& g) const;
  int index_of_code(Code128 code) const;
  int index_of(const Flag& f) const { return index_of_code(flag_code(f)); }

 private:
  const TypeGraph* type_ = nullptr;
  int order_ = 0;
  std::vector<Flag> flags_;
  std::unordered_map<Code128, int, Code128Hash> index_;
};

/// All k-vertex sigma-flags, found by trying every injection of the type into
/// every member of `graphs` (which must be F_k).
FlagBasis generate_flags(const TypeGraph& sigma, const GraphBasis& graphs);

/// Same, enumerating F_k first. Requires v(sigma) <= k <= 7.
FlagBasis generate_flags(const TypeGraph& sigma, int k);

/// p_F^sigma: fraction of injections of the type into the underlying graph
/// that give a flag isomorphic to f.
Rational root_probability(const Flag& f);

}  // namespace flagcert
