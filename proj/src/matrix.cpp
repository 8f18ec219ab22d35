#include "flagcert/matrix.hpp"

#include "flagcert/errors.hpp"

namespace flagcert {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : RationalMatrix(rows, cols, std::vector<Rational>(rows * cols)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw InputError("matrix entry count does not match its dimensions");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw InputError("matrix dimensions must be positive");
  std::vector<Rational> entries;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw InputError("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return RationalMatrix(rows.size(), rows.front().size(), std::move(entries));
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<std::vector<Rational>> RationalMatrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: inner dimensions differ");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b(k, c) != 0) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum: dimensions differ");
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return RationalMatrix(a.rows(), a.cols(), std::move(e));
}

RationalMatrix congruence(const RationalMatrix& q, const RationalMatrix& i) {
  if (!q.is_square() || q.rows() != i.rows()) throw InputError("congruence: Q must be square with side rows(I)");
  return i.transpose() * (q * i);
}

namespace {

void check_symmetric(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("positive definiteness needs a square matrix");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (m(r, c) != m(c, r)) {
        throw InputError("matrix is not symmetric at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
      }
}

// Integer matrix s * m with s the lcm of all denominators.
std::vector<Integer> scaled_integers(const RationalMatrix& m, Integer& scale) {
  scale = 1;
  for (const Rational& x : m.entries()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> a;
  a.reserve(m.entries().size());
  for (const Rational& x : m.entries()) a.push_back(x.get_num() * (scale / x.get_den()));
  return a;
}

// Bareiss elimination without pivoting; calls pivot(k, value) for each leading
// minor of the integer matrix and stops early if it returns false.
template <typename Visit>
void bareiss(std::vector<Integer> a, std::size_t n, Visit&& pivot) {
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot(k, a[k * n + k]) || a[k * n + k] == 0) return;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = a[i * n + j];
        x = x * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
}

}  // namespace

bool is_positive_definite(const RationalMatrix& m) {
  check_symmetric(m);
  Integer scale;
  bool ok = true;
  bareiss(scaled_integers(m, scale), m.rows(), [&](std::size_t, const Integer& p) {
    if (p <= 0) ok = false;
    return ok;
  });
  return ok;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("determinant needs a square matrix");
  const std::size_t n = m.rows();
  Integer scale;
  std::vector<Integer> a = scaled_integers(m, scale);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = a[i * n + j];
        x = x * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
  Rational det(sign * prev, power);
  det.canonicalize();
  return det;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("minors need a square matrix");
  Integer scale;
  std::vector<Rational> out;
  Integer power = 1;
  bareiss(scaled_integers(m, scale), m.rows(), [&](std::size_t, const Integer& p) {
    power *= scale;
    out.push_back(Rational(p, power));
    out.back().canonicalize();
    return p != 0;
  });
  // After a zero pivot the elimination cannot continue without row swaps, so
  // the remaining minors are computed one at a time.
  for (std::size_t k = out.size(); k < m.rows(); ++k) {
    RationalMatrix sub(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c <= k; ++c) sub(r, c) = m(r, c);
    out.push_back(determinant(sub));
  }
  return out;
}

std::vector<std::vector<Rational>> row_space_basis(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<Rational>> work = rows;
  const std::size_t cols = work.empty() ? 0 : work.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < work.size(); ++c) {
    std::size_t p = rank;
    while (p < work.size() && work[p][c] == 0) ++p;
    if (p == work.size()) continue;
    std::swap(work[rank], work[p]);
    const Rational inv = 1 / work[rank][c];
    for (auto& x : work[rank]) x *= inv;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == rank || work[r][c] == 0) continue;
      const Rational f = work[r][c];
      for (std::size_t j = c; j < cols; ++j) work[r][j] -= f * work[rank][j];
    }
    ++rank;
  }
  work.resize(rank);
  return work;
}

std::size_t rank(const RationalMatrix& m) { return row_space_basis(m.to_rows()).size(); }

}  // namespace flagcert
