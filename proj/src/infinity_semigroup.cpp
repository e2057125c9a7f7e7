#include "wsinf/infinity_semigroup.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace wsinf {

namespace {

// Membership in <m, lambda0> in O(1) after precomputing m^{-1} mod lambda0:
// n = a*m + b*lambda0 with a, b >= 0 iff the least a >= 0 with
// a = n*m^{-1} (mod lambda0) satisfies a*m <= n.
struct TwoGeneratedMembership {
  Int m, lambda0, inv;
  TwoGeneratedMembership(Int m_, Int lambda0_)
      : m(m_), lambda0(lambda0_), inv(mod_inverse(m_ % lambda0_, lambda0_)) {}
  bool contains(Int n) const {
    if (n < 0) return false;
    Int a = static_cast<Int>(static_cast<__int128>(n % lambda0) * inv % lambda0);
    return checked_mul(a, m) <= n;
  }
};

Int epsilon_r_minus_1(const KummerExtension& c) {
  // eta_{r-1} = 0, so epsilon_{r-1} = m(r-1) - lambda0.
  return checked_sub(checked_mul(c.m, c.r() - 1), c.lambda0);
}

}  // namespace

std::map<Int, std::vector<Int>> theorem_blocks(const KummerExtension& c,
                                               const EtaSequence& eta) {
  std::map<Int, std::vector<Int>> blocks;
  for (Int k = c.r(); k <= c.lambda0 - 1; ++k) {
    std::vector<Int> strip;
    Int top = eta.at_extended(k);
    strip.reserve(static_cast<std::size_t>(top));
    for (Int kp = 1; kp <= top; ++kp)
      strip.push_back(checked_sub(checked_mul(c.m, k), checked_mul(kp, c.lambda0)));
    blocks.emplace(k, std::move(strip));
  }
  return blocks;
}

std::vector<Int> theorem_generators(const KummerExtension& c,
                                    const EtaSequence& eta) {
  std::vector<Int> gens = {c.m, c.lambda0};
  for (Int k = c.r(); k <= c.lambda0 - 1; ++k)
    gens.push_back(checked_sub(checked_mul(c.m, k),
                               checked_mul(c.lambda0, eta.at_extended(k))));
  return gens;
}

std::vector<Int> gap_set_closed_form(const KummerExtension& c,
                                     const EtaSequence& eta) {
  std::vector<Int> gaps;
  for (Int a = 1; a <= c.lambda0 - 1; ++a) {
    Int top = floor_div(checked_mul(a, c.m), c.lambda0);
    for (Int b = eta.at_extended(a) + 1; b <= top; ++b)
      gaps.push_back(checked_sub(checked_mul(c.m, a), checked_mul(b, c.lambda0)));
  }
  std::sort(gaps.begin(), gaps.end());
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] < 1)
      fail(errc::internal_inconsistency, "gap formula produced a nonpositive value");
    if (i > 0 && gaps[i] == gaps[i - 1])
      fail(errc::internal_inconsistency, "gap formula produced a duplicate");
  }
  return gaps;
}

std::pair<Int, Int> frobenius_closed_form_routes(const KummerExtension& c,
                                                 const EtaSequence& eta) {
  Int base = std::numeric_limits<Int>::min();
  Int refined = std::numeric_limits<Int>::min();
  for (Int k = c.r() - 1; k <= c.lambda0 - 1; ++k) {
    Int e = epsilon_value(c, eta, k);
    base = std::max(base, e);
    // k = r-1 always qualifies, so the restricted set is never empty.
    if (eta.at_extended(k) ==
        floor_div(checked_mul(k + 1 - c.r(), c.m), c.lambda0))
      refined = std::max(refined, e);
  }
  return {base, refined};
}

Int frobenius_closed_form(const KummerExtension& c, const EtaSequence& eta) {
  auto [base, refined] = frobenius_closed_form_routes(c, eta);
  if (base != refined)
    fail(errc::internal_inconsistency,
         "the two Frobenius formulas disagree: " + std::to_string(base) +
             " vs " + std::to_string(refined));
  return base;
}

Int multiplicity_closed_form(const KummerExtension& c, const EtaSequence& eta,
                             const NumericalSemigroup& h) {
  Int direct = h.multiplicity();
  if (c.all_lambda_coprime_to_m()) {
    Int f = frobenius_closed_form(c, eta);
    Int v = std::min(c.m, checked_sub(checked_mul(c.m, c.r() - 1), f));
    if (v != direct)
      fail(errc::internal_inconsistency,
           "coprime-case multiplicity formula gives " + std::to_string(v) +
               ", direct value is " + std::to_string(direct));
  }
  if (c.all_lambda_divide_m()) {
    Int v = std::min(c.m, c.lambda0);
    if (c.r() < c.lambda0) {
      Int max_eps = std::numeric_limits<Int>::min();
      for (Int k = c.r(); k <= c.lambda0 - 1; ++k)
        max_eps = std::max(max_eps, epsilon_value(c, eta, k));
      v = std::min(v, checked_sub(epsilon_r_minus_1(c), max_eps));
    }
    if (v != direct)
      fail(errc::internal_inconsistency,
           "divisible-case multiplicity formula gives " + std::to_string(v) +
               ", direct value is " + std::to_string(direct));
  }
  return direct;
}

Int multiplicity_closed_form(const KummerExtension& c, const EtaSequence& eta) {
  auto h = NumericalSemigroup::from_generators(theorem_generators(c, eta));
  return multiplicity_closed_form(c, eta, h);
}

std::pair<bool, bool> symmetry_divisibility_test(const KummerExtension& c,
                                                 const EtaSequence& eta,
                                                 const NumericalSemigroup& h) {
  bool left =
      h.frobenius() == epsilon_value(c, eta, c.r() - 1) && h.is_symmetric();
  bool right = c.all_lambda_divide_m();
  if (left != right)
    fail(errc::internal_inconsistency,
         "divisibility criterion for symmetry violated");
  return {left, right};
}

std::pair<bool, bool> symmetry_divisibility_test(const KummerExtension& c,
                                                 const EtaSequence& eta) {
  auto h = NumericalSemigroup::from_generators(theorem_generators(c, eta));
  return symmetry_divisibility_test(c, eta, h);
}

CoprimeCaseEquivalences coprime_case_equivalences(const KummerExtension& c,
                                                  const EtaSequence& /*eta*/,
                                                  const NumericalSemigroup& h) {
  if (!c.all_lambda_coprime_to_m())
    fail(errc::hypothesis_not_met,
         "requires gcd(m, lambda_j) = 1 for every j");
  CoprimeCaseEquivalences out;
  out.all_equal = c.all_lambda_equal();
  out.symmetric = h.is_symmetric();
  out.applicable_iii = c.r() < c.m;
  out.h_equals_m_r = false;  // <m, r> needs gcd 1 for a finite complement
  if (std::gcd(c.m, c.r()) == 1) {
    // Equal Frobenius numbers are necessary for equality, and checking
    // them first keeps the construction within h's own conductor.
    Int f_two_gen = checked_sub(checked_mul(c.m, c.r()), c.m + c.r());
    if (f_two_gen == h.frobenius()) {
      auto two_gen = NumericalSemigroup::from_generators(
          {c.m, c.r()}, std::max<Int>(h.conductor(), 1));
      out.h_equals_m_r = two_gen.gaps() == h.gaps();
    }
  }
  if (out.h_equals_m_r != out.all_equal)
    fail(errc::internal_inconsistency,
         "equality with <m, r> must match all multiplicities being equal");
  if (out.applicable_iii && out.h_equals_m_r != out.symmetric)
    fail(errc::internal_inconsistency,
         "for r < m, symmetry must match equality with <m, r>");
  return out;
}

CoprimeCaseEquivalences coprime_case_equivalences(const KummerExtension& c,
                                                  const EtaSequence& eta) {
  auto h = NumericalSemigroup::from_generators(theorem_generators(c, eta));
  return coprime_case_equivalences(c, eta, h);
}

namespace {

struct AperyFormula {
  std::vector<Int> values;  // sorted
  bool residues_complete = false;
  bool floor_sum_equals_genus = false;
  bool matches_direct = false;
};

AperyFormula apery_formula_impl(const KummerExtension& c,
                                const EtaSequence& eta,
                                const NumericalSemigroup& h, Int genus) {
  AperyFormula out;
  out.values.reserve(static_cast<std::size_t>(c.lambda0));
  for (Int k = 0; k < c.lambda0; ++k)
    out.values.push_back(
        checked_add(epsilon_value(c, eta, k), c.lambda0));
  std::sort(out.values.begin(), out.values.end());

  std::vector<char> seen(static_cast<std::size_t>(c.lambda0), 0);
  out.residues_complete = true;
  Int floor_sum = 0;
  for (Int v : out.values) {
    if (v < 0) {
      out.residues_complete = false;
      break;
    }
    Int cls = v % c.lambda0;
    if (seen[cls]) {
      out.residues_complete = false;
      break;
    }
    seen[cls] = 1;
    floor_sum = checked_add(floor_sum, v / c.lambda0);
  }
  out.floor_sum_equals_genus = out.residues_complete && floor_sum == genus;
  out.matches_direct = out.values == h.apery_set(c.lambda0);
  return out;
}

}  // namespace

std::vector<Int> apery_at_lambda0(const KummerExtension& c,
                                  const EtaSequence& eta,
                                  const NumericalSemigroup& h) {
  AperyFormula f = apery_formula_impl(c, eta, h, curve_genus(c));
  if (!f.residues_complete)
    fail(errc::internal_inconsistency,
         "epsilon_k + lambda0 do not form a transversal mod lambda0");
  if (!f.floor_sum_equals_genus)
    fail(errc::internal_inconsistency,
         "Apery floor sum does not equal the genus");
  if (!f.matches_direct)
    fail(errc::internal_inconsistency,
         "Apery formula disagrees with the direct Apery set");
  return f.values;
}

std::vector<Int> apery_at_lambda0(const KummerExtension& c,
                                  const EtaSequence& eta) {
  auto h = NumericalSemigroup::from_generators(theorem_generators(c, eta));
  return apery_at_lambda0(c, eta, h);
}

std::vector<Int> reduced_generators(const KummerExtension& c,
                                    const EtaSequence& eta,
                                    const NumericalSemigroup& h) {
  std::vector<Int> out = {c.m, c.lambda0};
  Int lambda = c.max_lambda();
  if (lambda > 1) {
    const auto& values = eta.values();
    for (Int i = floor_div(c.m, lambda); i <= c.m - ceil_div(c.m, lambda);
         ++i) {
      auto it = std::lower_bound(values.begin(), values.end(), i);
      if (it == values.end() || *it != i) continue;  // level never attained
      Int k = c.r() + static_cast<Int>(it - values.begin());
      out.push_back(
          checked_sub(checked_mul(c.m, k), checked_mul(c.lambda0, i)));
    }
  }
  // The reduced set generates a subsemigroup of h, so a conductor beyond
  // h's already proves inequality.
  bool same = false;
  try {
    auto closure = NumericalSemigroup::from_generators(
        out, std::max<Int>(h.conductor(), 1));
    same = closure.gaps() == h.gaps();
  } catch (const Error& e) {
    if (e.code() != errc::resource_limit) throw;
  }
  if (!same)
    fail(errc::internal_inconsistency,
         "reduced generators do not generate the same semigroup");
  if (lambda > 1) {
    Int bound = c.m - ceil_div(c.m, lambda) - floor_div(c.m, lambda) + 3;
    if (static_cast<Int>(out.size()) > bound || bound > c.m)
      fail(errc::internal_inconsistency,
           "reduced generator count exceeds its bound");
  }
  return out;
}

std::vector<Int> reduced_generators(const KummerExtension& c,
                                    const EtaSequence& eta) {
  auto h = NumericalSemigroup::from_generators(theorem_generators(c, eta));
  return reduced_generators(c, eta, h);
}

namespace {

InfinitySemigroupReport build_report(const KummerExtension& c,
                                     const Limits& lim,
                                     std::vector<std::string>& failed) {
  InfinitySemigroupReport rep;
  rep.curve = c;
  rep.input_lambdas = c.lambdas;

  auto check = [&](const std::string& name, bool ok) {
    rep.consistency_flags[name] = ok;
    if (!ok) failed.push_back(name);
  };

  const Int m = c.m;
  const Int l0 = c.lambda0;
  const Int r = c.r();

  rep.genus = curve_genus(c);
  // The report materializes lambda0-length vectors and one strip element
  // per gap of <m, lambda0>; both are bounded by the conductor cap.
  Int two_gen_genus = checked_mul(m - 1, l0 - 1) / 2;
  if (l0 > lim.max_conductor || two_gen_genus > lim.max_conductor)
    fail(errc::resource_limit,
         "strip decomposition larger than the conductor cap allows");

  rep.eta = eta_sequence(c);
  for (Int k = 0; k < l0; ++k)
    rep.epsilon.push_back(epsilon_value(c, rep.eta, k));

  rep.blocks = theorem_blocks(c, rep.eta);

  // Strip elements must be positive, pairwise distinct across strips, and
  // gaps of <m, lambda0> (disjointness of the union).
  std::unordered_set<Int> strip_elems;
  Int strip_total = 0;
  bool positive = true, pairwise = true, outside = true;
  for (const auto& [k, strip] : rep.blocks) {
    for (Int x : strip) {
      ++strip_total;
      positive = positive && x > 0;
      pairwise = pairwise && strip_elems.insert(x).second;
      outside = outside && two_generator_gap_test(x, m, l0);
    }
  }
  check("blocks_positive", positive);
  check("blocks_pairwise_disjoint", pairwise);
  check("blocks_outside_two_generated", outside);
  check("union_cardinality", strip_total == two_gen_genus - rep.genus);

  rep.theorem_generators = theorem_generators(c, rep.eta);
  rep.semigroup =
      NumericalSemigroup::from_generators(rep.theorem_generators, lim.max_conductor);
  const NumericalSemigroup& h = rep.semigroup;

  check("gap_count_equals_genus", h.genus() == rep.genus);

  // The membership predicate must agree with the two-part union pointwise.
  TwoGeneratedMembership two_gen(m, l0);
  bool union_matches = true;
  Int window = checked_mul(2, h.conductor());
  for (Int n = 0; n <= window; ++n) {
    bool in_union = two_gen.contains(n) || strip_elems.count(n) > 0;
    if (in_union != h.contains(n)) {
      union_matches = false;
      break;
    }
  }
  check("disjoint_union_matches_membership", union_matches);
  // The fast <m, lambda0> membership must itself agree with the
  // arithmetic gap test on a bounded prefix.
  bool two_gen_routes = true;
  for (Int n = 0; n <= std::min<Int>(window, 2000); ++n)
    if (two_gen.contains(n) == two_generator_gap_test(n, m, l0)) {
      two_gen_routes = false;
      break;
    }
  check("two_generated_routes_agree", two_gen_routes);

  rep.gap_set_closed_form = gap_set_closed_form(c, rep.eta);
  check("gap_formula_matches_complement", rep.gap_set_closed_form == h.gaps());

  auto [f_base, f_refined] = frobenius_closed_form_routes(c, rep.eta);
  check("frobenius_routes_agree", f_base == f_refined);
  check("frobenius_formula_matches", f_base == h.frobenius());
  rep.frobenius = h.frobenius();

  bool mult_ok = true;
  try {
    multiplicity_closed_form(c, rep.eta, h);
  } catch (const Error& e) {
    if (e.code() != errc::internal_inconsistency) throw;
    mult_ok = false;
  }
  check("multiplicity_formula_matches", mult_ok);
  rep.multiplicity = h.multiplicity();

  rep.symmetric = h.is_symmetric();
  check("apery_symmetry_agrees",
        h.symmetry_via_apery(l0) == rep.symmetric);

  bool div_ok = true;
  try {
    symmetry_divisibility_test(c, rep.eta, h);
  } catch (const Error& e) {
    if (e.code() != errc::internal_inconsistency) throw;
    div_ok = false;
  }
  check("divisibility_symmetry_iff", div_ok);

  if (c.all_lambda_coprime_to_m()) {
    bool coprime_ok = true;
    try {
      coprime_case_equivalences(c, rep.eta, h);
    } catch (const Error& e) {
      if (e.code() != errc::internal_inconsistency) throw;
      coprime_ok = false;
    }
    check("coprime_case_iff", coprime_ok);
  }

  AperyFormula apery = apery_formula_impl(c, rep.eta, h, rep.genus);
  check("apery_residues_complete", apery.residues_complete);
  check("apery_floor_sum_equals_genus", apery.floor_sum_equals_genus);
  check("apery_formula_matches", apery.matches_direct);
  rep.apery_lambda0 = std::move(apery.values);

  bool reduced_ok = true;
  try {
    rep.reduced_generators = reduced_generators(c, rep.eta, h);
  } catch (const Error& e) {
    if (e.code() != errc::internal_inconsistency) throw;
    reduced_ok = false;
    rep.reduced_generators = rep.theorem_generators;
  }
  check("reduced_generators_consistent", reduced_ok);

  // Pairing of eta values around the center r + lambda0 - 1.
  bool eta_pair = true, eps_pair = true;
  bool coprime = c.all_lambda_coprime_to_m();
  bool divides = c.all_lambda_divide_m();
  Int eps_r1 = epsilon_r_minus_1(c);
  for (Int s = 0; s <= r + l0 - 1; ++s) {
    Int partner = r + l0 - 1 - s;
    Int sum = rep.eta.at_extended(s) + rep.eta.at_extended(partner);
    if (sum != m && sum != m - 1) eta_pair = false;
    if (coprime && sum != m - 1) eta_pair = false;
    if (divides && s >= r && s <= l0 - 1 && sum != m) eta_pair = false;

    Int es = epsilon_value(c, rep.eta, s);
    Int ep = epsilon_value(c, rep.eta, partner);
    if (sum == m) {
      if (es + ep != eps_r1 - l0 || eps_r1 <= es) eps_pair = false;
    } else if (sum == m - 1) {
      if (es + ep != eps_r1 || ((eps_r1 > es) != (ep > 0))) eps_pair = false;
    }
    if ((es < 0) != (rep.eta.at_extended(s) == floor_div(checked_mul(s, m), l0)))
      eps_pair = false;
  }
  check("eta_pairing", eta_pair);
  check("epsilon_pairing", eps_pair);

  return rep;
}

}  // namespace

InfinitySemigroupReport semigroup_at_infinity(const KummerExtension& c,
                                              const Limits& limits) {
  std::vector<std::string> failed;
  InfinitySemigroupReport rep = build_report(c, limits, failed);
  if (!failed.empty()) {
    std::string joined;
    for (const auto& name : failed) {
      if (!joined.empty()) joined += ", ";
      joined += name;
    }
    fail(errc::internal_inconsistency, "cross-checks failed: " + joined);
  }
  return rep;
}

InfinitySemigroupReport semigroup_at_infinity_collect(
    const KummerExtension& c, const Limits& limits,
    std::vector<std::string>& failed_checks) {
  return build_report(c, limits, failed_checks);
}

}  // namespace wsinf
