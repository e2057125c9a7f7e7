#include "wsinf/ints.hpp"

namespace wsinf {

const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_generators: return "EmptyGenerators";
    case errc::non_positive_generator: return "NonPositiveGenerator";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::overflow: return "Overflow";
    case errc::not_a_member: return "NotAMember";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::resource_limit: return "ResourceLimit";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::hypothesis_not_met: return "HypothesisNotMet";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::not_a_square: return "NotASquare";
    case errc::index_out_of_range: return "IndexOutOfRange";
  }
  return "UnknownError";
}

Int checked_pow(Int base, Int exp) {
  if (exp < 0) fail(errc::invalid_parameter, "negative exponent");
  Int out = 1;
  for (Int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

Int isqrt(Int n) {
  if (n < 0) fail(errc::invalid_parameter, "isqrt of a negative number");
  if (n < 2) return n;
  Int x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(Int n, Int* p_out, Int* e_out) {
  if (n < 2) return false;
  Int p = n;
  for (Int d = 2; d <= p / d; ++d) {
    if (p % d == 0) {
      p = d;
      break;
    }
  }
  Int e = 0;
  Int rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

Int mod_inverse(Int a, Int n) {
  if (n < 2) fail(errc::invalid_parameter, "modulus must be at least 2");
  Int r0 = n, r1 = ((a % n) + n) % n;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) fail(errc::precondition_violated, "mod_inverse: arguments are not coprime");
  return ((t0 % n) + n) % n;
}

}  // namespace wsinf
