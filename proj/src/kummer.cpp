#include "wsinf/kummer.hpp"

#include <algorithm>
#include <limits>

namespace wsinf {

KummerExtension KummerExtension::create(Int m, std::vector<Int> lambdas,
                                        std::optional<Int> characteristic) {
  if (m < 2) fail(errc::invalid_parameter, "m must be at least 2");
  if (lambdas.size() < 2)
    fail(errc::invalid_parameter,
         "need at least two branch multiplicities (r >= 2)");
  Int lambda0 = 0;
  for (Int l : lambdas) {
    if (l < 1 || l >= m)
      fail(errc::invalid_parameter, "multiplicity " + std::to_string(l) +
                                        " violates 1 <= lambda_i < m");
    lambda0 = checked_add(lambda0, l);
  }
  if (std::gcd(m, lambda0) != 1)
    fail(errc::gcd_not_one, "gcd(m, lambda0) = gcd(" + std::to_string(m) +
                                ", " + std::to_string(lambda0) + ") != 1");
  if (characteristic) {
    Int p = *characteristic;
    if (!is_prime(p))
      fail(errc::invalid_parameter,
           "characteristic " + std::to_string(p) + " is not prime");
    if (m % p == 0)
      fail(errc::invalid_parameter,
           "characteristic " + std::to_string(p) + " divides m");
  }
  KummerExtension c;
  c.m = m;
  c.lambdas = std::move(lambdas);
  c.lambda0 = lambda0;
  c.characteristic = characteristic;
  return c;
}

bool KummerExtension::all_lambda_divide_m() const {
  for (Int l : lambdas)
    if (m % l != 0) return false;
  return true;
}

bool KummerExtension::all_lambda_coprime_to_m() const {
  for (Int l : lambdas)
    if (std::gcd(m, l) != 1) return false;
  return true;
}

bool KummerExtension::all_lambda_equal() const {
  for (Int l : lambdas)
    if (l != lambdas.front()) return false;
  return true;
}

Int KummerExtension::max_lambda() const {
  return *std::max_element(lambdas.begin(), lambdas.end());
}

Int curve_genus(const KummerExtension& c) {
  Int gcd_sum = 0;
  for (Int l : c.lambdas) gcd_sum += std::gcd(c.m, l);
  Int numerator = checked_add(checked_mul(c.m - 1, c.r() - 1), c.r() - gcd_sum);
  if (numerator % 2 != 0)
    fail(errc::internal_inconsistency, "genus numerator is odd");
  return numerator / 2;
}

EtaSequence::EtaSequence(Int m, Int r, Int lambda0, std::vector<Int> values)
    : m_(m), r_(r), lambda0_(lambda0), values_(std::move(values)) {
  if (static_cast<Int>(values_.size()) != lambda0_ - r_)
    fail(errc::internal_inconsistency, "eta sequence has the wrong length");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1 || values_[i] > m_ - 1)
      fail(errc::internal_inconsistency, "eta value out of [1, m-1]");
    if (i > 0 && values_[i - 1] > values_[i])
      fail(errc::internal_inconsistency, "eta sequence is not non-decreasing");
  }
}

EtaSequence eta_sequence(const KummerExtension& c) {
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(c.lambda0 - c.r()));
  Int gcd_sum = 0;
  for (Int l : c.lambdas) {
    gcd_sum += std::gcd(c.m, l);
    for (Int s = 1; s < l; ++s)
      values.push_back(floor_div(checked_mul(s, c.m), l));
  }
  std::sort(values.begin(), values.end());
  EtaSequence eta(c.m, c.r(), c.lambda0, std::move(values));
  // Closed-form total of the sequence; a cheap guard on the construction.
  Int sum = 0;
  for (Int v : eta.values()) sum = checked_add(sum, v);
  Int expected =
      (checked_mul(c.m - 1, c.lambda0 - c.r()) - c.r() + gcd_sum) / 2;
  if (sum != expected)
    fail(errc::internal_inconsistency, "eta sum does not match its closed form");
  return eta;
}

namespace {

struct EtaSearch {
  const KummerExtension& c;
  Int max_compositions;
  Int visited = 0;
  Int best = -1;
  std::vector<Int> suffix_min;  // number of parts remaining after index i
  std::vector<Int> suffix_max;  // sum of lambda_i over the remaining parts

  explicit EtaSearch(const KummerExtension& curve, Int cap)
      : c(curve), max_compositions(cap) {
    std::size_t r = c.lambdas.size();
    suffix_min.assign(r + 1, 0);
    suffix_max.assign(r + 1, 0);
    for (std::size_t i = r; i-- > 0;) {
      suffix_min[i] = suffix_min[i + 1] + 1;
      suffix_max[i] = suffix_max[i + 1] + c.lambdas[i];
    }
  }

  void run(std::size_t i, Int remaining, Int current_min) {
    if (++visited > max_compositions)
      fail(errc::resource_limit, "composition budget exhausted in eta search");
    if (current_min <= best) return;  // min only decreases along a branch
    if (i == c.lambdas.size()) {
      best = std::max(best, current_min);
      return;
    }
    Int lambda = c.lambdas[i];
    Int lo = std::max<Int>(1, remaining - suffix_max[i + 1]);
    Int hi = std::min<Int>(lambda, remaining - suffix_min[i + 1]);
    // Larger parts give larger floors; descending order finds good bounds
    // early and lets the pruning bite.
    for (Int s = hi; s >= lo; --s) {
      Int rho = floor_div(checked_mul(s, c.m), lambda);
      run(i + 1, remaining - s, std::min(current_min, rho));
    }
  }
};

}  // namespace

Int eta_bruteforce(const KummerExtension& c, Int k, Int max_compositions) {
  if (c.r() == c.lambda0)
    fail(errc::index_out_of_range, "eta is empty when r = lambda0");
  if (k < c.r() || k > c.lambda0 - 1)
    fail(errc::index_out_of_range,
         "eta index " + std::to_string(k) + " outside [r, lambda0-1]");
  EtaSearch search(c, max_compositions);
  search.run(0, k, std::numeric_limits<Int>::max());
  if (search.best < 1)
    fail(errc::internal_inconsistency, "eta search found no composition");
  return search.best;
}

Int epsilon_value(const KummerExtension& c, const EtaSequence& eta, Int k) {
  if (k < 0) fail(errc::index_out_of_range, "epsilon index must be nonnegative");
  return checked_sub(checked_mul(c.m, k),
                     checked_mul(c.lambda0, eta.at_extended(k) + 1));
}

}  // namespace wsinf
