#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcert/enumerate.hpp"
#include "flagcert/flags.hpp"
#include "flagcert/rational.hpp"
#include "flagcert/three_graph.hpp"

namespace flagcert {

/// An orientation of K_n on vertices 0..n-1.
class Tournament {
 public:
  Tournament() = default;
  /// The transitive tournament with i -> j for all i < j.
  explicit Tournament(int n);

  /// Bits for pairs (i, j), i < j, in lexicographic order; bit set iff i -> j.
  static Tournament from_bits(int n, const std::vector<bool>& bits);
  std::vector<bool> bits() const;

  int order() const noexcept { return n_; }
  bool arc(int x, int y) const { return out_[static_cast<std::size_t>(x * n_ + y)] != 0; }
  /// Orients {x, y} as x -> y.
  void set_arc(int x, int y);
  void reverse(int x, int y) { set_arc(y, x); }

  int out_degree(int x) const;
  int in_degree(int x) const { return n_ - 1 - out_degree(x); }
  bool is_cyclic(int x, int y, int z) const {
    return (arc(x, y) && arc(y, z) && arc(z, x)) || (arc(y, x) && arc(z, y) && arc(x, z));
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> out_;
};

/// "n:" then C(n,2) bits in pair order, e.g. "3:101" for the 3-cycle 0->1->2->0.
std::string encode_tournament(const Tournament& t);
Tournament decode_tournament(std::string_view text);

/// Tournament on the vertices `keep` (in that order) of t.
Tournament induced_tournament(const Tournament& t, const std::vector<int>& keep);

/// C(T): the 3-graph on 1..n whose edges are the cyclic triangles (vertex v of
/// T becomes vertex v+1).
ThreeGraph ct_construction(const Tournament& t);

/// Per-pair cyclic and transitive codegrees. For an arc x -> y, C(x,y) counts
/// z with y -> z -> x and R(x,y) counts z with x -> z -> y. Both tables are
/// symmetric (indexed by the unordered pair).
struct CodegreeReport {
  int n = 0;
  std::vector<int> c;  ///< n*n
  std::vector<int> r;  ///< n*n
  int delta2 = 0;      ///< min over pairs of C; 0 when n < 2
  /// R(x,y) = (n-2) - d^-(x) - d^+(y) + C(x,y) held for every arc.
  bool identity_holds = true;
  int cyclic(int x, int y) const { return c[static_cast<std::size_t>(x * n + y)]; }
  int transitive(int x, int y) const { return r[static_cast<std::size_t>(x * n + y)]; }
};
CodegreeReport cyclic_codegrees(const Tournament& t);

/// Lexicographically minimal bit string over all relabellings (n <= 9).
Tournament canonical_tournament(const Tournament& t);
bool are_isomorphic(const Tournament& a, const Tournament& b);

/// Non-isomorphic tournaments on k vertices as canonical representatives,
/// sorted by bit string. 1 <= k <= 7; larger k throws CostGuardError.
std::vector<Tournament> enumerate_tournaments(int k);

/// Some T with C(T) = g exactly (so C(T) is isomorphic to g), or none.
/// Orients pairs in lexicographic order, forcing the third pair of a triple
/// once two are set. v(g) <= 7, else CostGuardError.
std::optional<Tournament> realize_as_tournament(const ThreeGraph& g);

/// realize_as_tournament(graph) for every member of the basis.
std::vector<bool> realizable_mask(const GraphBasis& graphs);

/// Rank data for a five-vertex type against its six-vertex flags.
struct IotaDimension {
  int realizations = 0;  ///< labelled J on [5] with C(J) = type, up to reversal
  int rank = 0;          ///< d_i
  std::vector<std::vector<Rational>> vectors;  ///< one extension distribution per J
  std::vector<std::vector<Rational>> basis;    ///< row-reduced basis of their span
};
/// For each labelled tournament J on [5] with C(J) equal to the type graph,
/// the distribution over `flags` of C(J + v) for the 32 ways to attach v;
/// d is the rank of these vectors.
IotaDimension iota_dimension(const FlagBasis& flags);

/// floor(3u/(n-1) - (n-2)/2) with u = floor((n-1)/2) ceil((n-1)/2); n >= 3.
int t_upper_bound(int n);
/// max delta2 over all tournaments on n vertices, 1 <= n <= 7.
int t_exact(int n);

/// +-1 matrix with A A^T = n I and A + A^T = 2 I.
class SkewHadamardMatrix {
 public:
  /// Validates both identities; throws InputError naming the first failure.
  SkewHadamardMatrix(int order, std::vector<int> entries);
  int order() const noexcept { return n_; }
  int operator()(int r, int c) const { return e_[static_cast<std::size_t>(r * n_ + c)]; }
  const std::vector<int>& entries() const noexcept { return e_; }
  friend bool operator==(const SkewHadamardMatrix&, const SkewHadamardMatrix&) = default;

 private:
  int n_;
  std::vector<int> e_;
};

/// Empty string if valid, otherwise a description of the first failure.
std::string skew_hadamard_defect(int order, const std::vector<int>& entries);

/// Empty string if t is doubly regular (n = 4k+3, all degrees (n-1)/2, all
/// C = (n+1)/4), else which condition failed where.
std::string doubly_regular_defect(const Tournament& t);

/// Borders the skew adjacency matrix (+1 for i -> j) with a row of +1 and a
/// column of -1 and adds I. Throws InputError unless t is doubly regular.
SkewHadamardMatrix tournament_to_skew_hadamard(const Tournament& t);
/// Negates row/column pairs so that row 0 is all +1, then reads the arcs off
/// the remaining block.
Tournament skew_hadamard_to_tournament(const SkewHadamardMatrix& h);

/// Matrix file: order line, then rows of +-1 separated by spaces.
std::string encode_matrix(const SkewHadamardMatrix& h);
SkewHadamardMatrix decode_matrix(std::string_view text);

/// Quadratic-residue tournament: i -> j iff j - i is a non-zero square mod q.
/// q prime, q = 3 mod 4, q <= 1000.
Tournament paley_tournament(int q);

/// Adds vertex y = n with x -> y and every {v, y} oriented opposite to {v, x}.
/// t must be doubly regular.
Tournament extend_tournament(const Tournament& t, int x);

/// max over Y of sum_x |d+(x,Y) - d-(x,Y)| / n^2. Taking X = V is optimal
/// because every term is non-negative. n <= 20.
Rational quasirandomness_defect(const Tournament& t);

}  // namespace flagcert
