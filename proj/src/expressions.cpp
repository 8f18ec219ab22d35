#include "flagcert/expressions.hpp"

#include <algorithm>
#include <numeric>

#include "flagcert/combinatorics.hpp"
#include "flagcert/errors.hpp"

namespace flagcert {

const GraphBasis& ProofContext::graphs(int k) {
  if (k < 1) throw InputError("graph basis order must be at least 1");
  if (k > kMaxEnumerationOrder) throw CostGuardError("graph basis order above 7 exceeds the enumeration cost guard");
  std::lock_guard lock(mutex_);
  auto& slot = graphs_[static_cast<std::size_t>(k)];
  if (!slot) slot = std::make_unique<GraphBasis>(GraphBasis::free_graphs(k));
  return *slot;
}

const FlagBasis& ProofContext::flags(const TypeGraph& type, int k) {
  std::lock_guard lock(mutex_);
  for (const auto& [key, basis] : flags_)
    if (key.first == &type && key.second == k) return *basis;
  if (k < type.order() || k > kMaxEnumerationOrder) throw InputError("flag size out of range for " + type.name);
  auto basis = std::make_unique<FlagBasis>(generate_flags(type, graphs(k)));
  flags_.emplace_back(std::pair{&type, k}, std::move(basis));
  return *flags_.back().second;
}

const DensityMatrix& ProofContext::f6_to_f7() {
  std::lock_guard lock(mutex_);
  if (!f6_to_f7_) f6_to_f7_ = std::make_unique<DensityMatrix>(graphs(6), graphs(7));
  return *f6_to_f7_;
}

const PairDensityTable& ProofContext::codegree_table() {
  std::lock_guard lock(mutex_);
  if (!codegree_) {
    const TypeGraph& tau = types::tau();
    codegree_ = std::make_unique<PairDensityTable>(flags(tau, 6), flags(tau, 3), graphs(7));
  }
  return *codegree_;
}

const PairDensityTable& ProofContext::sigma_table(int i) {
  const TypeGraph& sigma = types::sigma(i);
  std::lock_guard lock(mutex_);
  auto& slot = sigma_[static_cast<std::size_t>(i)];
  if (!slot) slot = std::make_unique<PairDensityTable>(flags(sigma, 5), flags(sigma, 5), graphs(6));
  return *slot;
}

const PairDensityTable& ProofContext::iota_table(int i) {
  const TypeGraph& iota = types::iota(i);
  std::lock_guard lock(mutex_);
  auto& slot = iota_[static_cast<std::size_t>(i - 1)];
  if (!slot) slot = std::make_unique<PairDensityTable>(flags(iota, 6), flags(iota, 6), graphs(7));
  return *slot;
}

LinComb target_vector(const GraphBasis& graphs) {
  LinComb out(graphs.id(), graphs.size());
  const long triples = static_cast<long>(binomial(graphs.order(), 3));
  if (triples == 0) throw InputError("target_vector needs graphs on at least 3 vertices");
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const long edges = static_cast<long>(graphs.graph(g).size());
    Rational value(triples - 4 * edges, triples);
    value.canonicalize();
    out.set(static_cast<int>(g), value);
  }
  return out;
}

namespace {

std::vector<CodegreeExpression> build_codegree_expressions(ProofContext& ctx) {
  const PairDensityTable& table = ctx.codegree_table();
  const FlagBasis& small = table.second();
  const FlagBasis& large = table.first();

  // 3 E - N, indexed by the 3-vertex tau-flags.
  std::vector<Rational> weights(small.size());
  for (std::size_t b = 0; b < small.size(); ++b) weights[b] = small.flag(b).graph.size() == 1 ? 3 : -1;
  std::vector<LinComb> rows = table.contract_second(weights);

  std::vector<CodegreeExpression> out;
  for (std::size_t a = 0; a < large.size(); ++a) {
    const int swapped = large.index_of(permute_root(large.flag(a), {1, 0}));
    if (swapped < 0) throw InputError("codegree: swapped flag missing from tau/6");
    if (swapped < static_cast<int>(a)) continue;
    CodegreeExpression e;
    e.id = encode_flag(large.flag(a));
    e.sources.push_back(static_cast<int>(a));
    if (swapped != static_cast<int>(a)) e.sources.push_back(swapped);
    e.value = std::move(rows[a]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CodegreeExpression>& ProofContext::codegree_expressions() {
  std::lock_guard lock(mutex_);
  if (!codegree_exprs_)
    codegree_exprs_ = std::make_unique<std::vector<CodegreeExpression>>(build_codegree_expressions(*this));
  return *codegree_exprs_;
}

const std::vector<CodegreeExpression>& codegree_expressions(ProofContext& ctx) { return ctx.codegree_expressions(); }

bool has_tight_path(const SmallGraph& g) {
  if (g.order() != 5) return false;
  std::array<int, 5> v{0, 1, 2, 3, 4};
  auto in = [](int x, int p, int q, int r) { return x == p || x == q || x == r; };
  do {
    if (!g.has_edge(v[0], v[1], v[2]) || !g.has_edge(v[1], v[2], v[3]) || !g.has_edge(v[2], v[3], v[4])) continue;
    if (in(0, v[0], v[1], v[2]) && in(1, v[0], v[1], v[2]) && in(2, v[2], v[3], v[4]) && in(3, v[2], v[3], v[4])) {
      return true;
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return false;
}

std::array<std::vector<int>, 3> tight_path_flag_sets(ProofContext& ctx) {
  std::array<std::vector<int>, 3> out;
  for (int i = 0; i < 3; ++i) {
    const FlagBasis& basis = ctx.flags(types::sigma(i), 5);
    for (std::size_t a = 0; a < basis.size(); ++a)
      if (has_tight_path(rooted_small_graph(basis.flag(a)))) out[i].push_back(static_cast<int>(a));
  }
  return out;
}

std::vector<Rational> tight_path_weights(ProofContext& ctx, int i, const std::vector<int>& members) {
  const FlagBasis& basis = ctx.flags(types::sigma(i), 5);
  std::vector<Rational> w(basis.size(), Rational(-1));
  for (int a : members) {
    if (a < 0 || a >= static_cast<int>(basis.size())) throw InputError("tight-path member index out of range");
    w[static_cast<std::size_t>(a)] = 15;
  }
  return w;
}

LinComb tight_path_expression(ProofContext& ctx, int i) {
  return tight_path_expression(ctx, i, tight_path_flag_sets(ctx)[static_cast<std::size_t>(i)]);
}

LinComb tight_path_expression(ProofContext& ctx, int i, const std::vector<int>& members) {
  const std::vector<Rational> w = tight_path_weights(ctx, i, members);
  return ctx.f6_to_f7().lift(ctx.sigma_table(i).bilinear(w, w));
}

LinComb iota_quadratic_expression(ProofContext& ctx, int i, const std::vector<std::vector<Rational>>& m) {
  const PairDensityTable& table = ctx.iota_table(i);
  const std::size_t k = table.first().size();
  if (m.size() != k) throw InputError("iota" + std::to_string(i) + ": matrix side must be " + std::to_string(k));
  for (std::size_t a = 0; a < k; ++a) {
    if (m[a].size() != k) throw InputError("iota" + std::to_string(i) + ": matrix is not square");
    for (std::size_t b = 0; b < a; ++b)
      if (m[a][b] != m[b][a]) throw InputError("iota" + std::to_string(i) + ": matrix is not symmetric");
  }
  return table.quadratic(m);
}

}  // namespace flagcert
