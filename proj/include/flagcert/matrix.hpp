#pragma once

#include <cstddef>
#include <vector>

#include "flagcert/rational.hpp"

namespace flagcert {

/// Dense exact rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  /// Zero matrix; rows and cols must be positive.
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  RationalMatrix transpose() const;
  std::vector<std::vector<Rational>> to_rows() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);

/// I^T Q I, the form a certificate block contributes.
RationalMatrix congruence(const RationalMatrix& q, const RationalMatrix& i);

/// Exact test via Bareiss elimination on the matrix scaled to integers: the
/// k-th pivot is the k-th leading principal minor (times a positive power of
/// the scale), and m is positive definite iff every pivot is positive.
/// Throws InputError for non-square or asymmetric input.
bool is_positive_definite(const RationalMatrix& m);

/// Exact determinant (fraction-free elimination with row swaps).
Rational determinant(const RationalMatrix& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n, by Bareiss on
/// the integer-scaled matrix, rescaled back. Used as the test oracle.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Rank over the rationals.
std::size_t rank(const RationalMatrix& m);

/// A basis of the row space (reduced rows), rank() rows long.
std::vector<std::vector<Rational>> row_space_basis(const std::vector<std::vector<Rational>>& rows);

}  // namespace flagcert
