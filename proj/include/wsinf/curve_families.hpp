#pragma once

#include <map>
#include <string>
#include <vector>

#include "wsinf/kummer.hpp"

namespace wsinf {

/// A named curve together with the generator set its family is known to
/// produce, used as a regression fixture against the generic pipeline.
struct FamilyInstance {
  std::string name;
  std::map<std::string, Int> parameters;
  KummerExtension curve;
  std::vector<Int> expected_generators;
  Int field_size = 0;  // the field the family naturally lives over
};

/// y^{q^n+1} = (x^q + x) h(x)^{q+1} with h separable of degree q(q-1);
/// m = q^n + 1, q branch points of multiplicity 1 and q^2 - q of
/// multiplicity q+1. Expects <q^n+1, q^3, q(q^n+1)/(q+1)>. Lives over
/// the field of size q^{2n}. Requires q a prime power and n odd >= 3.
FamilyInstance ggs(Int q, Int n);

/// y^m = x^d (x^d - 1) ((x^{d(q-1)} - 1)/(x^d - 1))^{q+1} for d | q+1,
/// m | q^n + 1, gcd(m, d(q-1)) = 1: one branch point of multiplicity d,
/// d of multiplicity 1, d(q-2) of multiplicity q+1. Expects
/// {m, lambda0} plus m*k_b - lambda0*floor((b+1)m/(q+1)) for b < q.
FamilyInstance bm_subcover(Int q, Int n, Int d, Int m);

/// y^{q+1} = x^q + x over the field of size q^2; semigroup <q, q+1>.
FamilyInstance hermitian(Int q);

/// y^{q+1} = a^{-1}(x^{q/p} + ... + x^p + x) for q = p^e, e >= 2, over
/// the field of size q^2; the right side is separable of degree q/p, so
/// the semigroup is <q/p, q+1>.
FamilyInstance trace_curve(Int q, Int p);

}  // namespace wsinf
