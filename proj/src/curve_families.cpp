#include "wsinf/curve_families.hpp"

namespace wsinf {

namespace {

void require_prime_power(Int q, const char* who) {
  if (!is_prime_power(q))
    fail(errc::invalid_parameter,
         std::string(who) + ": q = " + std::to_string(q) +
             " is not a prime power");
}

void require_odd_ge3(Int n, const char* who) {
  if (n < 3 || n % 2 == 0)
    fail(errc::invalid_parameter,
         std::string(who) + ": n = " + std::to_string(n) +
             " must be an odd integer >= 3");
}

}  // namespace

FamilyInstance ggs(Int q, Int n) {
  require_prime_power(q, "ggs");
  require_odd_ge3(n, "ggs");
  Int m = checked_add(checked_pow(q, n), 1);
  std::vector<Int> lambdas;
  for (Int i = 0; i < q; ++i) lambdas.push_back(1);
  for (Int i = 0; i < q * q - q; ++i) lambdas.push_back(q + 1);

  FamilyInstance inst;
  inst.name = "ggs";
  inst.parameters = {{"q", q}, {"n", n}};
  inst.curve = KummerExtension::create(m, std::move(lambdas));
  if (m % (q + 1) != 0)
    fail(errc::internal_inconsistency, "q+1 must divide q^n+1 for odd n");
  inst.expected_generators = {m, checked_pow(q, 3), q * (m / (q + 1))};
  inst.field_size = checked_pow(q, 2 * n);
  return inst;
}

FamilyInstance bm_subcover(Int q, Int n, Int d, Int m) {
  require_prime_power(q, "bm_subcover");
  require_odd_ge3(n, "bm_subcover");
  if (d < 1 || (q + 1) % d != 0)
    fail(errc::invalid_parameter,
         "bm_subcover: d = " + std::to_string(d) + " must divide q + 1");
  if (m < 2 || checked_add(checked_pow(q, n), 1) % m != 0)
    fail(errc::invalid_parameter,
         "bm_subcover: m = " + std::to_string(m) + " must divide q^n + 1");
  if (std::gcd(m, checked_mul(d, q - 1)) != 1)
    fail(errc::invalid_parameter, "bm_subcover: gcd(m, d(q-1)) != 1");

  std::vector<Int> lambdas;
  lambdas.push_back(d);
  for (Int i = 0; i < d; ++i) lambdas.push_back(1);
  for (Int i = 0; i < d * (q - 2); ++i) lambdas.push_back(q + 1);
  for (Int l : lambdas)
    if (l >= m)
      fail(errc::invalid_parameter,
           "bm_subcover: branch multiplicity " + std::to_string(l) +
               " is not below m = " + std::to_string(m));

  FamilyInstance inst;
  inst.name = "bm_subcover";
  inst.parameters = {{"q", q}, {"n", n}, {"d", d}, {"m", m}};
  inst.curve = KummerExtension::create(m, std::move(lambdas));

  Int lambda0 = inst.curve.lambda0;  // d*q*(q-1)
  inst.expected_generators = {m, lambda0};
  for (Int b = 0; b < q; ++b) {
    Int k_b = checked_add(checked_mul(checked_mul(d, q - 1), b + 1),
                          1 + floor_div(b * d, q + 1) - b * d);
    Int eta_b = floor_div(checked_mul(b + 1, m), q + 1);
    inst.expected_generators.push_back(
        checked_sub(checked_mul(m, k_b), checked_mul(lambda0, eta_b)));
  }
  inst.field_size = checked_pow(q, 2 * n);
  return inst;
}

FamilyInstance hermitian(Int q) {
  require_prime_power(q, "hermitian");
  FamilyInstance inst;
  inst.name = "hermitian";
  inst.parameters = {{"q", q}};
  inst.curve = KummerExtension::create(q + 1, std::vector<Int>(q, 1));
  inst.expected_generators = {q, q + 1};
  inst.field_size = checked_mul(q, q);
  return inst;
}

FamilyInstance trace_curve(Int q, Int p) {
  Int base = 0, exp = 0;
  if (!is_prime_power(q, &base, &exp) || base != p || exp < 2)
    fail(errc::invalid_parameter,
         "trace_curve: q = " + std::to_string(q) +
             " must be p^e with e >= 2 for p = " + std::to_string(p));
  Int deg = q / p;  // separable degree of the trace polynomial
  FamilyInstance inst;
  inst.name = "trace";
  inst.parameters = {{"q", q}, {"p", p}};
  inst.curve =
      KummerExtension::create(q + 1, std::vector<Int>(deg, 1), p);
  inst.expected_generators = {deg, q + 1};
  inst.field_size = checked_mul(q, q);
  return inst;
}

}  // namespace wsinf
