#pragma once

#include <cstdint>
#include <numeric>

#include "wsinf/errors.hpp"

namespace wsinf {

/// All arithmetic in this library is exact 64-bit; anything that would
/// wrap raises errc::overflow instead.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in multiplication");
  return out;
}

Int checked_pow(Int base, Int exp);

/// Floor division, correct for negative numerators. Requires b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Ceiling division, correct for negative numerators. Requires b > 0.
inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Floor of sqrt(n) for n >= 0.
Int isqrt(Int n);

/// Trial-division primality test.
bool is_prime(Int n);

/// True when n = p^e for some prime p; if so, *p_out/*e_out receive p and e.
bool is_prime_power(Int n, Int* p_out = nullptr, Int* e_out = nullptr);

/// Inverse of a modulo n; requires gcd(a, n) = 1 and n >= 2.
Int mod_inverse(Int a, Int n);

}  // namespace wsinf
