#ifndef SEGREREG_NUMERIC_HPP
#define SEGREREG_NUMERIC_HPP

#include <stdexcept>

namespace segrereg {

/// Floor division, correct for negative numerators: floor_div(-3, 2) == -2.
constexpr long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/// Ceiling division: ceil_div(-3, 2) == -1, ceil_div(3, 2) == 2.
constexpr long long ceil_div(long long a, long long b) {
  return -floor_div(-a, b);
}

/// Binomial coefficient with the combinatorial convention C(a,b) = 0 for
/// a < 0, b < 0 or b > a.  Throws on overflow instead of wrapping; every
/// count in this library is exact or an error.
inline long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  long long result = 1;
  for (long long i = 1; i <= b; ++i) {
    // result * (a - b + i) may overflow before the division rebalances it
    long long num = a - b + i;
    if (__builtin_mul_overflow(result, num, &result))
      throw std::overflow_error("binomial: coefficient exceeds 64 bits");
    result /= i;
  }
  return result;
}

} // namespace segrereg

#endif
