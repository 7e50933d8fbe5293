#include "maxplus/semiring.hpp"

#include <ostream>

namespace maxplus {

TropValue power(const TropValue& a, std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("power: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (a.is_zero()) {
    if (num <= 0) throw ZeroToNonpositivePower();
    return kZero;
  }
  return TropValue(a.value() * static_cast<double>(num) /
                   static_cast<double>(den));
}

std::ostream& operator<<(std::ostream& os, const TropValue& a) {
  if (a.is_zero()) return os << "zero";
  return os << a.value();
}

}  // namespace maxplus
