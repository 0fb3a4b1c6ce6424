#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mjac {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

Integer power(const Integer& base, unsigned long exponent);

/// Number of F_q-points of P^k; zero for k < 0.
Integer projective_space_size(const Integer& q, long k);

/// Deterministic primality by trial division (inputs are desk-scale).
bool is_prime(std::uint64_t n);

/// True when `value` is representable as int64_t.
bool fits_int64(const Integer& value);

}  // namespace mjac
