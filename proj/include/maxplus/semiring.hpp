#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>

#include "maxplus/error.hpp"

namespace maxplus {

/// Scalar of the max-plus semiring: either a finite real or the zero
/// element (the analog of minus infinity). The zero element is a tag, never
/// a stored infinity, so no NaN or infinite payload can ever appear.
class TropValue {
 public:
  /// The unit element (conventional 0).
  constexpr TropValue() : finite_(true), value_(0.0) {}

  /// Implicit so that matrix literals can mix plain numbers and zero().
  TropValue(double v) : finite_(true), value_(v) {  // NOLINT
    if (!std::isfinite(v)) {
      throw std::invalid_argument("TropValue payload must be a finite real");
    }
  }

  static constexpr TropValue zero() { return TropValue(Tag{}); }
  static constexpr TropValue one() { return TropValue(); }

  constexpr bool is_zero() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  /// Payload; only meaningful for finite values.
  double value() const {
    if (!finite_) throw std::logic_error("value() of the zero element");
    return value_;
  }

  /// Payload with the zero element mapped to minus infinity, for printing
  /// and for code that wants conventional arithmetic.
  double to_double() const {
    return finite_ ? value_ : -std::numeric_limits<double>::infinity();
  }

  friend constexpr bool operator==(const TropValue& a, const TropValue& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

  /// Canonical order: a <= b iff a (+) b == b. The zero element is least.
  friend constexpr std::weak_ordering operator<=>(const TropValue& a,
                                                  const TropValue& b) {
    if (!a.finite_ || !b.finite_) {
      return a.finite_ <=> b.finite_;
    }
    if (a.value_ < b.value_) return std::weak_ordering::less;
    if (a.value_ > b.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

 private:
  struct Tag {};
  constexpr explicit TropValue(Tag) : finite_(false), value_(0.0) {}

  bool finite_;
  double value_;
};

inline constexpr TropValue kZero = TropValue::zero();
inline constexpr TropValue kOne = TropValue::one();

/// a (+) b = max(a, b).
constexpr TropValue oplus(const TropValue& a, const TropValue& b) {
  return (a < b) ? b : a;
}

/// a (x) b = a + b, with the zero element absorbing.
inline TropValue otimes(const TropValue& a, const TropValue& b) {
  if (a.is_zero() || b.is_zero()) return kZero;
  return TropValue(a.value() + b.value());
}

/// Multiplicative inverse (conventional negation).
inline TropValue inverse(const TropValue& a) {
  if (a.is_zero()) throw InverseOfZero();
  return TropValue(-a.value());
}

/// a^(num/den): conventional multiplication of the payload by num/den.
/// The zero element raised to a positive power stays zero.
TropValue power(const TropValue& a, std::int64_t num, std::int64_t den = 1);

/// a^(1/k), the unique tropical k-th root.
inline TropValue root(const TropValue& a, std::int64_t k) { return power(a, 1, k); }

/// Equality up to an absolute tolerance on finite payloads; zero elements
/// only match each other.
inline bool approx_equal(const TropValue& a, const TropValue& b, double tol) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return std::abs(a.value() - b.value()) <= tol;
}

/// a <= b + tol, treating the zero element as minus infinity.
inline bool leq_tol(const TropValue& a, const TropValue& b, double tol) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return a.value() <= b.value() + tol;
}

std::ostream& operator<<(std::ostream& os, const TropValue& a);

}  // namespace maxplus
