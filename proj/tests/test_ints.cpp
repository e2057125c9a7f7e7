#include <doctest.h>

#include "wsinf/ints.hpp"

using namespace wsinf;

TEST_CASE("checked arithmetic raises on overflow") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), Error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), Error);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), Error);
  try {
    checked_mul(INT64_MAX, 2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::overflow);
  }
}

TEST_CASE("floor and ceiling division handle negatives") {
  CHECK(floor_div(7, 3) == 2);
  CHECK(floor_div(-7, 3) == -3);
  CHECK(floor_div(6, 3) == 2);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(ceil_div(7, 3) == 3);
  CHECK(ceil_div(-7, 3) == -2);
  CHECK(ceil_div(0, 5) == 0);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(1'000'000'000'000) == 1'000'000);
}

TEST_CASE("primality and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  Int p = 0, e = 0;
  CHECK(is_prime_power(8, &p, &e));
  CHECK(p == 2);
  CHECK(e == 3);
  CHECK(is_prime_power(9, &p, &e));
  CHECK(p == 3);
  CHECK(e == 2);
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(10, 7) == 5);
  CHECK(mod_inverse(-4, 7) == 5);  // -4 = 3 mod 7
  CHECK_THROWS_AS(mod_inverse(2, 4), Error);
}
