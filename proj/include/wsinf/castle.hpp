#pragma once

#include "wsinf/infinity_semigroup.hpp"

namespace wsinf {

/// q * multiplicity + 1: upper bound on the number of rational places of a
/// curve over the field with q elements, given a rational place whose
/// Weierstrass semigroup has the given multiplicity.
Int lewittes_bound(Int field_size, Int multiplicity);

/// q + 1 + 2g*sqrt(q) for a perfect square q; NotASquare otherwise.
Int hasse_weil_bound(Int field_size, Int genus);

/// sqrt of a perfect square; NotASquare when none exists.
Int exact_sqrt(Int n);

struct CastleAssessment {
  Int field_size = 0;   // q^2; must be a perfect square
  Int point_count = 0;  // caller-supplied number of rational places
  Int genus = 0;
  Int multiplicity = 0;
  bool symmetric = false;
  Int lewittes = 0;
  Int hasse_weil = 0;
  // Verdicts.
  bool is_maximal = false;
  bool meets_lewittes_with_equality = false;
  bool is_castle = false;
  bool m_equals_q_plus_1 = false;
  bool all_lambda_equal = false;
  // True when the coprimality and r < m hypotheses hold, enabling the
  // five-way equivalence below.
  bool hypotheses_hold = false;
  bool equivalence_ok = false;
};

/// Evaluates the bounds and verdicts for a hypothetical point count over
/// the given square field. When gcd(m, lambda_i) = 1 for all i and r < m,
/// the five statements
///   maximal Castle;
///   Castle and m = q+1;
///   maximal, symmetric and m = q+1;
///   maximal, Lewittes equality and m = q+1;
///   maximal, all multiplicities equal and m = q+1
/// must agree, and disagreement raises InternalInconsistency.
CastleAssessment assess(const KummerExtension& c,
                        const InfinitySemigroupReport& report, Int field_size,
                        Int point_count);

/// When every lambda_i divides m the semigroup is automatically symmetric,
/// so for a curve known (by hypothesis, not from point_count) to be
/// maximal, Lewittes equality alone decides whether it is a maximal
/// Castle curve. Returns point_count == lewittes_bound.
bool divisible_case_castle_note(const KummerExtension& c,
                                const InfinitySemigroupReport& report,
                                Int field_size, Int point_count);

}  // namespace wsinf
