#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "flagcert/rational.hpp"

namespace flagcert {

/// Sparse exact linear combination over a named canonical graph list.
///
/// Zero coefficients are never stored, so two LinCombs are equal iff they
/// have the same basis and the same non-zero terms.
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(std::string basis_id, std::size_t basis_size)
      : basis_id_(std::move(basis_id)), basis_size_(basis_size) {}

  const std::string& basis_id() const noexcept { return basis_id_; }
  std::size_t basis_size() const noexcept { return basis_size_; }
  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(int index) const;
  void add(int index, const Rational& value);
  void set(int index, const Rational& value);

  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb& operator*=(const Rational& scalar);

  /// this += scalar * other
  void add_scaled(const LinComb& other, const Rational& scalar);

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.basis_id_ == b.basis_id_ && a.terms_ == b.terms_;
  }

 private:
  void check_index(int index) const;
  void check_compatible(const LinComb& other) const;

  std::string basis_id_;
  std::size_t basis_size_ = 0;
  std::map<int, Rational> terms_;
};

LinComb operator+(LinComb a, const LinComb& b);
LinComb operator-(LinComb a, const LinComb& b);
LinComb operator*(const Rational& s, LinComb a);

}  // namespace flagcert
