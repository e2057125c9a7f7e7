#include <doctest.h>

#include "wsinf/verify.hpp"

using namespace wsinf;

TEST_CASE("pole numbers of monomials enumerate the semigroup") {
  auto c = KummerExtension::create(5, {1, 2});
  auto h = NumericalSemigroup::from_generators({3, 4, 5});
  CHECK(pole_number_oracle(c, 20) == h.members_up_to(20));

  auto c2 = KummerExtension::create(3, {1, 1});
  CHECK(pole_number_oracle(c2, 10) ==
        std::vector<Int>{0, 2, 3, 4, 5, 6, 7, 8, 9, 10});

  CHECK(pole_number_oracle(c, 0) == std::vector<Int>{0});
}

TEST_CASE("pole oracle resource guard") {
  auto c = KummerExtension::create(5, {1, 2});
  CHECK_THROWS_AS(pole_number_oracle(c, 5000), Error);
  auto big = KummerExtension::create(16, {1, 2});
  CHECK_THROWS_AS(pole_number_oracle(big, 10), Error);
  try {
    pole_number_oracle(c, 5000);
  } catch (const Error& e) {
    CHECK(e.code() == errc::resource_limit);
  }
}

TEST_CASE("naive closure oracle") {
  std::vector<Int> gens = {6, 8, 9};
  auto members = closure_members_bruteforce(gens, 25);
  auto h = NumericalSemigroup::from_generators(gens);
  CHECK(members == h.members_up_to(25));
  CHECK(closure_members_bruteforce(gens, 0) == std::vector<Int>{0});
}

TEST_CASE("lambda vector enumeration is sorted and valid") {
  GridSpec spec;
  spec.max_m = 7;
  spec.max_lambda0 = 8;
  spec.max_r = 3;
  spec.max_lambda_part = 4;
  auto vecs = grid_lambda_vectors(spec, 7);
  CHECK(!vecs.empty());
  for (const auto& v : vecs) {
    Int sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(v[i] >= 1);
      CHECK(v[i] <= 4);
      if (i) CHECK(v[i - 1] <= v[i]);
      sum += v[i];
    }
    CHECK(sum <= 8);
    CHECK(std::gcd(Int{7}, sum) == 1);
    CHECK(v.size() >= 2);
    CHECK(v.size() <= 3);
  }
  // Lexicographic order.
  for (std::size_t i = 1; i < vecs.size(); ++i) {
    bool shorter = vecs[i - 1].size() < vecs[i].size();
    bool same_len_less =
        vecs[i - 1].size() == vecs[i].size() && vecs[i - 1] < vecs[i];
    CHECK((shorter || same_len_less));
  }
}

TEST_CASE("small grid sweeps clean") {
  GridSpec spec;
  spec.max_m = 9;
  spec.max_lambda0 = 8;
  spec.max_r = 3;
  spec.max_lambda_part = 4;
  spec.oracle_eta = true;
  spec.oracle_pole = true;
  spec.oracle_closure = true;
  auto summary = run_grid(spec);
  CHECK(summary.cases > 50);
  for (const auto& f : summary.failures) {
    CAPTURE(f.m);
    CAPTURE(f.lambdas);
    CAPTURE(f.check);
    CAPTURE(f.detail);
    CHECK(false);
  }
  CHECK(summary.failures.empty());
}

TEST_CASE("grid restricted to multiplicity-one curves is two-generated") {
  GridSpec spec;
  spec.max_m = 12;
  spec.max_lambda0 = 10;
  spec.max_r = 4;
  spec.max_lambda_part = 1;  // forces r = lambda0
  auto summary = run_grid(spec);
  CHECK(summary.failures.empty());
  for (Int m = 2; m <= spec.max_m; ++m) {
    for (const auto& lambdas : grid_lambda_vectors(spec, m)) {
      auto c = KummerExtension::create(m, lambdas);
      auto rep = semigroup_at_infinity(c);
      CHECK(rep.blocks.empty());
      CHECK(rep.semigroup.embedding_dimension() == 2);
    }
  }
}

TEST_CASE("grid bounds validation") {
  GridSpec spec;
  spec.max_m = 1;
  CHECK_THROWS_AS(run_grid(spec), Error);
}
