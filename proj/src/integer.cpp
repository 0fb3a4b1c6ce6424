#include "mjac/integer.hpp"

#include <limits>

namespace mjac {

Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer projective_space_size(const Integer& q, long k) {
  if (k < 0) return 0;
  // 1 + q + ... + q^k
  Integer sum = 0;
  Integer term = 1;
  for (long i = 0; i <= k; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool fits_int64(const Integer& value) {
  static const Integer lo = Integer(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi = Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value >= lo && value <= hi;
}

}  // namespace mjac
