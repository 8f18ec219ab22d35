#include "flagcert/lincomb.hpp"

#include "flagcert/errors.hpp"

namespace flagcert {

void LinComb::check_index(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= basis_size_) {
    throw InputError("index " + std::to_string(index) + " outside basis " + basis_id_);
  }
}

void LinComb::check_compatible(const LinComb& other) const {
  if (basis_id_ != other.basis_id_) {
    throw InputError("cannot combine LinCombs over " + basis_id_ + " and " + other.basis_id_);
  }
}

Rational LinComb::coefficient(int index) const {
  check_index(index);
  const auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add(int index, const Rational& value) {
  check_index(index);
  if (value == 0) return;
  auto [it, inserted] = terms_.emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void LinComb::set(int index, const Rational& value) {
  check_index(index);
  if (value == 0) {
    terms_.erase(index);
  } else {
    terms_[index] = value;
  }
}

LinComb& LinComb::operator+=(const LinComb& other) {
  check_compatible(other);
  for (const auto& [i, v] : other.terms_) add(i, v);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) {
  check_compatible(other);
  for (const auto& [i, v] : other.terms_) add(i, -v);
  return *this;
}

LinComb& LinComb::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, v] : terms_) v *= scalar;
  return *this;
}

void LinComb::add_scaled(const LinComb& other, const Rational& scalar) {
  check_compatible(other);
  if (scalar == 0) return;
  for (const auto& [i, v] : other.terms_) add(i, scalar * v);
}

LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

}  // namespace flagcert
