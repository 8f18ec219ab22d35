#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "flagcert/densities.hpp"
#include "flagcert/enumerate.hpp"
#include "flagcert/flags.hpp"
#include "flagcert/lincomb.hpp"

namespace flagcert {

/// One member of the codegree set: [[F x (3E - N)]]_tau for the flags in a
/// root-swap orbit. `id` is encode_flag of the smaller-index flag.
struct CodegreeExpression {
  std::string id;
  std::vector<int> sources;  ///< indices in tau/6, one or two
  LinComb value;
};

/// Lazily built graph lists, flag lists and pair-density tables shared by the
/// expression builders and the verifier. Getters are thread-safe; returned
/// references stay valid for the lifetime of the context.
class ProofContext {
 public:
  ProofContext() = default;
  ProofContext(const ProofContext&) = delete;
  ProofContext& operator=(const ProofContext&) = delete;

  /// F_k for 1 <= k <= 7.
  const GraphBasis& graphs(int k);
  /// k-vertex flags of `type` (one of types::proof_types() or types::empty()).
  const FlagBasis& flags(const TypeGraph& type, int k);
  /// p(H, G) for H in F6, G in F7.
  const DensityMatrix& f6_to_f7();
  /// [[F x F']]_tau for F in tau/6, F' in tau/3, over F7.
  const PairDensityTable& codegree_table();
  /// [[F_a x F_b]]_sigma_i over F6 for 5-vertex sigma_i-flags.
  const PairDensityTable& sigma_table(int i);
  /// [[F_a x F_b]]_iota_i over F7 for 6-vertex iota_i-flags.
  const PairDensityTable& iota_table(int i);
  /// The codegree expressions, built once from codegree_table().
  const std::vector<CodegreeExpression>& codegree_expressions();

 private:
  std::recursive_mutex mutex_;
  std::array<std::unique_ptr<GraphBasis>, 8> graphs_;
  std::vector<std::pair<std::pair<const TypeGraph*, int>, std::unique_ptr<FlagBasis>>> flags_;
  std::unique_ptr<DensityMatrix> f6_to_f7_;
  std::unique_ptr<PairDensityTable> codegree_;
  std::array<std::unique_ptr<PairDensityTable>, 3> sigma_;
  std::array<std::unique_ptr<PairDensityTable>, 6> iota_;
  std::unique_ptr<std::vector<CodegreeExpression>> codegree_exprs_;
};

/// Coefficient of G is p(N, G) - 3 p(E, G) = (C(v,3) - 4|G|) / C(v,3).
LinComb target_vector(const GraphBasis& graphs);

/// The 905 distinct codegree expressions, ordered by the smaller source index.
const std::vector<CodegreeExpression>& codegree_expressions(ProofContext& ctx);

/// True iff the rooted 5-vertex flag (root on vertices 0..3) has a vertex
/// ordering v1..v5 with edges v1v2v3, v2v3v4, v3v4v5, root labels {1,2} in
/// the first edge and {3,4} in the last.
bool has_tight_path(const SmallGraph& rooted);

/// Indices into sigma_i/5 of the flags with a tight path, for i = 0, 1, 2.
std::array<std::vector<int>, 3> tight_path_flag_sets(ProofContext& ctx);

/// Weight vector of the square: 15 on `members`, -1 elsewhere in sigma_i/5.
std::vector<Rational> tight_path_weights(ProofContext& ctx, int i, const std::vector<int>& members);

/// P_i = [[(16 sum_P F - sum_all F)^2]]_sigma_i over F7, expanded over F6
/// and lifted. The first form uses tight_path_flag_sets(); the second takes
/// P as indices into sigma_i/5.
LinComb tight_path_expression(ProofContext& ctx, int i);
LinComb tight_path_expression(ProofContext& ctx, int i, const std::vector<int>& members);

/// sum_{a,b} M_ab [[F_a x F_b]]_iota_i over F7. M must be symmetric k_i x k_i.
LinComb iota_quadratic_expression(ProofContext& ctx, int i, const std::vector<std::vector<Rational>>& m);

}  // namespace flagcert
