#include "wsinf/castle.hpp"

namespace wsinf {

Int lewittes_bound(Int field_size, Int multiplicity) {
  if (field_size < 2)
    fail(errc::invalid_parameter, "field size must be at least 2");
  if (multiplicity < 1)
    fail(errc::invalid_parameter, "multiplicity must be positive");
  return checked_add(checked_mul(field_size, multiplicity), 1);
}

Int exact_sqrt(Int n) {
  if (n < 0) fail(errc::not_a_square, "negative numbers are not squares");
  Int root = isqrt(n);
  if (root * root != n)
    fail(errc::not_a_square,
         std::to_string(n) + " is not a perfect square");
  return root;
}

Int hasse_weil_bound(Int field_size, Int genus) {
  if (genus < 0) fail(errc::invalid_parameter, "genus must be nonnegative");
  Int root = exact_sqrt(field_size);
  return checked_add(field_size,
                     checked_add(1, checked_mul(2, checked_mul(genus, root))));
}

CastleAssessment assess(const KummerExtension& c,
                        const InfinitySemigroupReport& report, Int field_size,
                        Int point_count) {
  Int q = exact_sqrt(field_size);
  if (q < 2) fail(errc::invalid_parameter, "field size must be at least 4");
  if (point_count < 0)
    fail(errc::invalid_parameter, "point count must be nonnegative");

  CastleAssessment a;
  a.field_size = field_size;
  a.point_count = point_count;
  a.genus = report.genus;
  a.multiplicity = report.multiplicity;
  a.symmetric = report.symmetric;
  a.lewittes = lewittes_bound(field_size, report.multiplicity);
  a.hasse_weil = hasse_weil_bound(field_size, report.genus);

  a.is_maximal = point_count == a.hasse_weil;
  a.meets_lewittes_with_equality = point_count == a.lewittes;
  a.is_castle = a.symmetric && a.meets_lewittes_with_equality;
  a.m_equals_q_plus_1 = c.m == q + 1;
  a.all_lambda_equal = c.all_lambda_equal();

  a.hypotheses_hold = c.all_lambda_coprime_to_m() && c.r() < c.m;
  if (a.hypotheses_hold) {
    bool s1 = a.is_maximal && a.is_castle;
    bool s2 = a.is_castle && a.m_equals_q_plus_1;
    bool s3 = a.is_maximal && a.symmetric && a.m_equals_q_plus_1;
    bool s4 = a.is_maximal && a.meets_lewittes_with_equality && a.m_equals_q_plus_1;
    bool s5 = a.is_maximal && a.all_lambda_equal && a.m_equals_q_plus_1;
    if (s1 != s2 || s1 != s3 || s1 != s4 || s1 != s5)
      fail(errc::internal_inconsistency,
           "the five maximal-Castle characterizations disagree");
  }
  a.equivalence_ok = true;
  return a;
}

bool divisible_case_castle_note(const KummerExtension& c,
                                const InfinitySemigroupReport& report,
                                Int field_size, Int point_count) {
  if (!c.all_lambda_divide_m())
    fail(errc::hypothesis_not_met,
         "requires every lambda_i to divide m");
  // Symmetry is forced by the divisibility hypothesis.
  if (!report.symmetric)
    fail(errc::internal_inconsistency,
         "semigroup must be symmetric when every lambda_i divides m");
  return point_count == lewittes_bound(field_size, report.multiplicity);
}

}  // namespace wsinf
