#pragma once

#include <string>

#include "tropinv/rational.hpp"

namespace tropinv {

/// Element of the max-plus semiring over the rationals: a finite rational
/// value or bottom (minus infinity). Addition is max, multiplication is +,
/// bottom is absorbing for multiplication and neutral for addition.
class TropScalar {
 public:
  TropScalar() : finite_(false) {}
  explicit TropScalar(Rational v) : finite_(true), value_(std::move(v)) {}

  static TropScalar bottom() { return TropScalar(); }
  static TropScalar one() { return TropScalar(Rational(0)); }

  bool is_bottom() const { return !finite_; }
  /// Finite value; callers must check is_bottom() first.
  const Rational& value() const {
    if (!finite_) throw DomainError("value() of bottom");
    return value_;
  }

  std::string to_string() const {
    return finite_ ? value_.to_string() : std::string("-inf");
  }

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) {
    return !(a == b);
  }
  /// Order with bottom below every finite value.
  friend bool operator<(const TropScalar& a, const TropScalar& b) {
    if (!a.finite_) return b.finite_;
    return b.finite_ && a.value_ < b.value_;
  }
  friend bool operator<=(const TropScalar& a, const TropScalar& b) {
    return a < b || a == b;
  }

  friend TropScalar trop_add(const TropScalar& a, const TropScalar& b) {
    return a < b ? b : a;
  }
  friend TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
    if (!a.finite_ || !b.finite_) return bottom();
    return TropScalar(a.value_ + b.value_);
  }

 private:
  bool finite_;
  Rational value_;
};

/// m-fold tropical product; the empty product (m == 0) is the unit, also for
/// bottom.
inline TropScalar trop_pow(const TropScalar& a, int m) {
  if (m < 0) throw DomainError("negative tropical power");
  if (m == 0) return TropScalar::one();
  if (a.is_bottom()) return TropScalar::bottom();
  return TropScalar(a.value() * Rational(m));
}

}  // namespace tropinv
