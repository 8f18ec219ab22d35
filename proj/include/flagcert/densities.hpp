#pragma once

#include <cstdint>
#include <vector>

#include "flagcert/enumerate.hpp"
#include "flagcert/flags.hpp"
#include "flagcert/lincomb.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

/// p(h, g): probability that v(h) uniformly random vertices of g induce a
/// copy of h; 0 when v(h) > v(g).
Rational density(const ThreeGraph& h, const ThreeGraph& g);

/// Rooted densities p(F, (g, root)) for every F in `flags`: the distribution of
/// the flag obtained by extending `root` with k - s random vertices of g.
/// `root` is 1-based and must induce the type of `flags` exactly.
std::vector<Rational> rooted_density_vector(const ThreeGraph& g, const std::vector<int>& root,
                                            const FlagBasis& flags);

/// Sparse table of p(H, G) for H in a smaller basis and G in a larger one,
/// stored as integer counts over the common denominator C(v(G), v(H)).
class DensityMatrix {
 public:
  DensityMatrix(const GraphBasis& from, const GraphBasis& to);

  const GraphBasis& from() const noexcept { return *from_; }
  const GraphBasis& to() const noexcept { return *to_; }
  std::uint64_t denominator() const noexcept { return denominator_; }
  /// (index in `from`, count) for target graph g.
  const std::vector<std::pair<int, std::int64_t>>& column(std::size_t g) const { return columns_.at(g); }

  Rational value(int h, int g) const;

  /// Rewrites a combination over `from` as one over `to` using
  /// H = sum_G p(H, G) G.
  LinComb lift(const LinComb& over_from) const;

 private:
  const GraphBasis* from_;
  const GraphBasis* to_;
  std::uint64_t denominator_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns_;
};

struct PairCount {
  std::int32_t a;
  std::int32_t b;
  std::int64_t count;
};

/// Flag pair densities pbar(F_a, F_b, G) for all pairs of flags of one type
/// and every G in a target basis, as integer counts over one denominator.
class PairDensityTable {
 public:
  /// Direct computation: for every G, every injection of the type and every
  /// ordered choice of disjoint vertex sets extending it to F_a and F_b.
  /// Targets larger than v(F_a) + v(F_b) - v(sigma) leave vertices unused,
  /// which is the same as averaging over the intermediate subgraphs.
  PairDensityTable(const FlagBasis& first, const FlagBasis& second, const GraphBasis& target);

  /// Composition: pbar(F_a, F_b, G) = sum_H p(H, G) pbar(F_a, F_b, H), with
  /// `base` computed over lift.from().
  static PairDensityTable compose(const PairDensityTable& base, const DensityMatrix& lift);

  const TypeGraph& type() const noexcept { return first_->type(); }
  const FlagBasis& first() const noexcept { return *first_; }
  const FlagBasis& second() const noexcept { return *second_; }
  const GraphBasis& target() const noexcept { return *target_; }
  std::int64_t denominator() const noexcept { return denominator_; }
  const std::vector<PairCount>& entries(std::size_t g) const { return by_graph_.at(g); }

  Rational value(int a, int b, int g) const;

  /// [[F_a x F_b]] over the target basis.
  LinComb product(int a, int b) const;

  /// sum_{a,b} m[a][b] * [[F_a x F_b]]; m has first().size() rows and
  /// second().size() columns.
  LinComb quadratic(const std::vector<std::vector<Rational>>& m) const;

  /// sum_{a,b} u[a] v[b] [[F_a x F_b]].
  LinComb bilinear(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

  /// One combination per first flag: row a is sum_b v[b] [[F_a x F_b]].
  std::vector<LinComb> contract_second(const std::vector<Rational>& v) const;

  /// Sum of all entries for graph g: probability that a random injection
  /// of the type into G induces it.
  Rational total(int g) const;

  /// Entry-for-entry equality of values (denominators may differ).
  bool same_values(const PairDensityTable& other) const;

 private:
  PairDensityTable() = default;

  const FlagBasis* first_ = nullptr;
  const FlagBasis* second_ = nullptr;
  const GraphBasis* target_ = nullptr;
  std::int64_t denominator_ = 1;
  std::vector<std::vector<PairCount>> by_graph_;
};

}  // namespace flagcert
