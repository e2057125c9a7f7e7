#include <doctest.h>

#include "wsinf/curve_families.hpp"
#include "wsinf/infinity_semigroup.hpp"

using namespace wsinf;

namespace {

void check_expected_matches_pipeline(const FamilyInstance& inst) {
  auto rep = semigroup_at_infinity(inst.curve);
  auto expected = NumericalSemigroup::from_generators(inst.expected_generators);
  CHECK(expected.gaps() == rep.semigroup.gaps());
}

}  // namespace

TEST_CASE("ggs instances") {
  auto a = ggs(2, 3);
  CHECK(a.curve.m == 9);
  CHECK(a.curve.lambdas == std::vector<Int>{1, 1, 3, 3});
  CHECK(a.expected_generators == std::vector<Int>{9, 8, 6});
  CHECK(a.field_size == 64);
  check_expected_matches_pipeline(a);
  auto rep = semigroup_at_infinity(a.curve);
  CHECK(rep.semigroup.minimal_generators() == std::vector<Int>{6, 8, 9});

  auto b = ggs(2, 5);
  CHECK(b.curve.m == 33);
  CHECK(b.expected_generators == std::vector<Int>{33, 8, 22});
  check_expected_matches_pipeline(b);

  auto c = ggs(3, 3);
  CHECK(c.curve.m == 28);
  CHECK(c.curve.lambdas ==
        std::vector<Int>{1, 1, 1, 4, 4, 4, 4, 4, 4});
  CHECK(c.expected_generators == std::vector<Int>{28, 27, 21});
  check_expected_matches_pipeline(c);

  CHECK_THROWS_AS(ggs(2, 4), Error);   // n even
  CHECK_THROWS_AS(ggs(6, 3), Error);   // not a prime power
  CHECK_THROWS_AS(ggs(2, 1), Error);   // n too small
}

TEST_CASE("ggs frobenius closed form in q and n") {
  // Larger parameters exercise strips with hundreds of elements.
  for (auto [q, n] : std::vector<std::pair<Int, Int>>{
           {2, 3}, {2, 5}, {3, 3}, {3, 5}, {4, 3}, {5, 3}}) {
    auto inst = ggs(q, n);
    auto rep = semigroup_at_infinity(inst.curve);
    Int expected = checked_pow(q, n + 2) - checked_pow(q, n) -
                   checked_pow(q, 3) + q * q - 1;
    CHECK(rep.frobenius == expected);
    CHECK(rep.symmetric);  // every multiplicity divides q^n + 1
  }
}

TEST_CASE("bm subcover instances") {
  auto a = bm_subcover(3, 3, 1, 7);
  CHECK(a.curve.lambdas == std::vector<Int>{1, 1, 4});
  CHECK(a.expected_generators == std::vector<Int>{7, 6, 15, 10, 5});
  check_expected_matches_pipeline(a);
  auto rep_a = semigroup_at_infinity(a.curve);
  CHECK(rep_a.semigroup.minimal_generators() == std::vector<Int>{5, 6, 7});

  auto b = bm_subcover(3, 3, 4, 7);
  CHECK(b.curve.r() == 9);
  CHECK(b.curve.lambda0 == 24);
  CHECK(b.expected_generators == std::vector<Int>{7, 24, 39, 26, 13});
  check_expected_matches_pipeline(b);
  auto rep_b = semigroup_at_infinity(b.curve);
  CHECK(rep_b.semigroup.minimal_generators() == std::vector<Int>{7, 13, 24});

  auto c = bm_subcover(2, 3, 1, 9);
  CHECK(c.curve.r() == 2);
  CHECK(c.curve.lambdas == std::vector<Int>{1, 1});
  CHECK(c.expected_generators == std::vector<Int>{9, 2, 12, 6});
  check_expected_matches_pipeline(c);
  auto rep_c = semigroup_at_infinity(c.curve);
  CHECK(rep_c.semigroup.minimal_generators() == std::vector<Int>{2, 9});

  // Smallest valid case: q = 2 has no parts of multiplicity q + 1.
  auto d = bm_subcover(2, 3, 1, 3);
  CHECK(d.curve.lambdas == std::vector<Int>{1, 1});
  check_expected_matches_pipeline(d);

  CHECK_THROWS_AS(bm_subcover(3, 3, 3, 7), Error);   // 3 does not divide 4
  CHECK_THROWS_AS(bm_subcover(3, 3, 1, 6), Error);   // 6 does not divide 28
  CHECK_THROWS_AS(bm_subcover(3, 3, 2, 14), Error);  // gcd(14, 4) = 2
  CHECK_THROWS_AS(bm_subcover(2, 3, 3, 9), Error);   // gcd(9, 3) = 3
  CHECK_THROWS_AS(bm_subcover(4, 3, 1, 5), Error);   // part q + 1 = 5 not below m
}

TEST_CASE("hermitian instances") {
  for (Int q : {2, 3, 4}) {
    auto inst = hermitian(q);
    CHECK(inst.curve.m == q + 1);
    CHECK(inst.curve.r() == q);
    CHECK(inst.field_size == q * q);
    check_expected_matches_pipeline(inst);
    auto rep = semigroup_at_infinity(inst.curve);
    auto two_gen = NumericalSemigroup::from_generators({q, q + 1});
    CHECK(rep.semigroup.gaps() == two_gen.gaps());
    // All multiplicities equal: the coprime-case theorem puts H = <m, r>.
    auto eq = coprime_case_equivalences(inst.curve, rep.eta, rep.semigroup);
    CHECK(eq.h_equals_m_r);
    CHECK(eq.all_equal);
  }
  CHECK_THROWS_AS(hermitian(6), Error);
}

TEST_CASE("trace curve instances") {
  auto a = trace_curve(4, 2);
  CHECK(a.curve.m == 5);
  CHECK(a.curve.lambdas == std::vector<Int>{1, 1});
  check_expected_matches_pipeline(a);
  auto rep = semigroup_at_infinity(a.curve);
  CHECK(rep.semigroup.gaps() ==
        NumericalSemigroup::from_generators({2, 5}).gaps());

  auto b = trace_curve(8, 2);
  CHECK(b.curve.m == 9);
  CHECK(b.curve.r() == 4);
  check_expected_matches_pipeline(b);

  auto c = trace_curve(9, 3);
  CHECK(c.curve.m == 10);
  CHECK(c.curve.r() == 3);
  check_expected_matches_pipeline(c);

  CHECK_THROWS_AS(trace_curve(4, 3), Error);  // 4 is not a power of 3
  CHECK_THROWS_AS(trace_curve(2, 2), Error);  // e = 1
}
