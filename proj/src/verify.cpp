#include "wsinf/verify.hpp"

#include <algorithm>

namespace wsinf {

std::vector<Int> pole_number_oracle(const KummerExtension& c, Int window) {
  if (window < 0) fail(errc::invalid_parameter, "window must be nonnegative");
  if (c.lambda0 > 12 || c.m > 15 || window > 2000)
    fail(errc::resource_limit,
         "pole oracle guard: lambda0 <= 12, m <= 15, window <= 2000");

  std::vector<char> marked(static_cast<std::size_t>(window) + 1, 0);
  // For fixed t the valuation constraints are s_i >= ceil(lambda_i*t/m)
  // (and >= 0); raising any s_i further stays valid, so the reachable pole
  // numbers for that t are exactly m*s - lambda0*t for every total s at or
  // above the sum of the lower bounds. Negative t (powers of y) has no
  // finite poles, so its lower bounds are all zero.
  Int t_lo = -(window / c.lambda0);
  Int t_hi = window + c.m;
  for (Int t = t_lo; t <= t_hi; ++t) {
    Int base_total = 0;
    for (Int l : c.lambdas) base_total += std::max<Int>(0, ceil_div(l * t, c.m));
    Int value = c.m * base_total - c.lambda0 * t;
    for (; value <= window; value += c.m)
      if (value >= 0) marked[static_cast<std::size_t>(value)] = 1;
  }

  // Close under addition within the window.
  std::vector<char> member(marked);
  for (Int n = 1; n <= window; ++n) {
    if (member[n]) continue;
    for (Int a = 1; a + a <= n; ++a)
      if (member[a] && member[n - a]) {
        member[n] = 1;
        break;
      }
  }
  std::vector<Int> out;
  for (Int n = 0; n <= window; ++n)
    if (member[n]) out.push_back(n);
  return out;
}

std::vector<Int> closure_members_bruteforce(std::span<const Int> gens,
                                            Int window) {
  if (window < 0) fail(errc::invalid_parameter, "window must be nonnegative");
  std::vector<char> member(static_cast<std::size_t>(window) + 1, 0);
  member[0] = 1;
  for (Int n = 1; n <= window; ++n) {
    for (Int g : gens) {
      if (g >= 1 && g <= n && member[n - g]) {
        member[n] = 1;
        break;
      }
    }
  }
  std::vector<Int> out;
  for (Int n = 0; n <= window; ++n)
    if (member[n]) out.push_back(n);
  return out;
}

std::vector<std::vector<Int>> grid_lambda_vectors(const GridSpec& spec, Int m) {
  std::vector<std::vector<Int>> out;
  Int max_part = std::min(spec.max_lambda_part, m - 1);
  if (max_part < 1) return out;
  for (Int r = 2; r <= spec.max_r; ++r) {
    // Non-decreasing vectors of length r with entries in [1, max_part]
    // and sum at most max_lambda0, filtered by gcd(m, sum) = 1.
    std::vector<Int> current;
    auto rec = [&](auto&& self, Int min_part) -> void {
      Int len = static_cast<Int>(current.size());
      if (len == r) {
        Int sum = 0;
        for (Int l : current) sum += l;
        if (std::gcd(m, sum) == 1) out.push_back(current);
        return;
      }
      Int used = 0;
      for (Int l : current) used += l;
      for (Int part = min_part; part <= max_part; ++part) {
        if (used + part * (r - len) > spec.max_lambda0) break;
        current.push_back(part);
        self(self, part);
        current.pop_back();
      }
    };
    rec(rec, 1);
  }
  return out;
}

namespace {

void run_case(const GridSpec& spec, const KummerExtension& c,
              GridSummary& summary) {
  auto report_failure = [&](const std::string& check, const std::string& detail) {
    summary.failures.push_back({c.m, c.lambdas, check, detail});
  };

  std::vector<std::string> failed;
  InfinitySemigroupReport rep;
  try {
    rep = semigroup_at_infinity_collect(c, spec.limits, failed);
  } catch (const Error& e) {
    report_failure(errc_name(e.code()), e.what());
    return;
  }
  for (const auto& name : failed) report_failure(name, "pipeline cross-check");

  if (spec.oracle_eta && c.r() < c.lambda0) {
    Int sum = 0;
    for (Int k = c.r(); k <= c.lambda0 - 1; ++k) {
      Int direct;
      try {
        direct = eta_bruteforce(c, k, spec.limits.max_compositions);
      } catch (const Error& e) {
        report_failure("eta_oracle", e.what());
        break;
      }
      if (direct != rep.eta.at_extended(k)) {
        report_failure("eta_oracle",
                       "index " + std::to_string(k) + ": bruteforce " +
                           std::to_string(direct) + " vs sorted multiset " +
                           std::to_string(rep.eta.at_extended(k)));
      }
      sum += direct;
    }
    Int gcd_sum = 0;
    for (Int l : c.lambdas) gcd_sum += std::gcd(c.m, l);
    Int expected =
        ((c.m - 1) * (c.lambda0 - c.r()) - c.r() + gcd_sum) / 2;
    if (sum != expected)
      report_failure("eta_sum", "sum " + std::to_string(sum) +
                                    " != closed form " + std::to_string(expected));
  }

  if (spec.oracle_pole && c.lambda0 <= 12 && c.m <= 15) {
    Int window = std::min<Int>(2 * rep.semigroup.conductor(), 2000);
    try {
      auto oracle = pole_number_oracle(c, window);
      auto direct = rep.semigroup.members_up_to(window);
      if (oracle != direct)
        report_failure("pole_oracle", "pole numbers differ from membership on [0, " +
                                          std::to_string(window) + "]");
    } catch (const Error& e) {
      report_failure("pole_oracle", e.what());
    }
  }

  if (spec.oracle_closure) {
    Int window = 2 * rep.semigroup.conductor();
    auto closure =
        closure_members_bruteforce(rep.theorem_generators, window);
    auto direct = rep.semigroup.members_up_to(window);
    if (closure != direct)
      report_failure("closure_oracle", "naive closure differs from membership");

    auto minimal = rep.semigroup.minimal_generators();
    auto regen = NumericalSemigroup::from_generators(minimal);
    if (!(regen.gaps() == rep.semigroup.gaps()))
      report_failure("minimal_regen",
                     "minimal generators do not regenerate the semigroup");
    if (static_cast<Int>(minimal.size()) > rep.semigroup.multiplicity())
      report_failure("embedding_bound",
                     "embedding dimension exceeds the multiplicity");

    // Order invariance: the multiplicities form a multiset.
    std::vector<Int> reversed(c.lambdas.rbegin(), c.lambdas.rend());
    auto permuted = KummerExtension::create(c.m, reversed);
    std::vector<std::string> ignored;
    auto rep2 = semigroup_at_infinity_collect(permuted, spec.limits, ignored);
    if (!(rep2.semigroup.gaps() == rep.semigroup.gaps()))
      report_failure("order_invariance",
                     "permuting the multiplicities changed the semigroup");
  }
}

}  // namespace

GridSummary run_grid(const GridSpec& spec) {
  if (spec.max_m < 2 || spec.max_r < 2 || spec.max_lambda0 < 2 ||
      spec.max_lambda_part < 1)
    fail(errc::invalid_parameter, "grid bounds are too small");
  GridSummary summary;
  for (Int m = 2; m <= spec.max_m; ++m) {
    for (const auto& lambdas : grid_lambda_vectors(spec, m)) {
      auto c = KummerExtension::create(m, lambdas);
      ++summary.cases;
      run_case(spec, c, summary);
    }
  }
  return summary;
}

}  // namespace wsinf
