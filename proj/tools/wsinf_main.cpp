// Command-line front end: analyze a curve given by (m, lambdas), run the
// named curve families, assess Castle verdicts for a supplied point count,
// or sweep the verification grid. Reports go to stdout (text or JSON),
// diagnostics to stderr. Exit codes: 0 ok, 1 invalid input, 2 internal
// inconsistency, 3 resource limit.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsinf/curve_families.hpp"
#include "wsinf/report.hpp"

namespace {

using namespace wsinf;

int exit_code_for(errc code) {
  switch (code) {
    case errc::internal_inconsistency:
      return 2;
    case errc::resource_limit:
      return 3;
    default:
      return 1;
  }
}

struct CommonOptions {
  std::string format = "text";
  bool check = false;
  Int max_conductor = limits::kDefaultMaxConductor;
  Int max_compositions = limits::kDefaultMaxCompositions;

  Limits limits_value() const { return Limits{max_conductor, max_compositions}; }
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_flag("--check", opts.check, "Run extra per-curve cross-checks");
  cmd->add_option("--max-conductor", opts.max_conductor,
                  "Refuse semigroups with a larger conductor")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-compositions", opts.max_compositions,
                  "Budget for the exponential eta search")
      ->check(CLI::PositiveNumber);
}

// Optional extra cross-checks for one curve: the definition-level eta
// search and the pole-number enumeration, where their guards allow.
void run_extra_checks(InfinitySemigroupReport& rep, const Limits& lim) {
  const KummerExtension& c = rep.curve;
  if (c.r() < c.lambda0) {
    bool ok = true;
    try {
      for (Int k = c.r(); k <= c.lambda0 - 1; ++k)
        if (eta_bruteforce(c, k, lim.max_compositions) != rep.eta.at_extended(k))
          ok = false;
    } catch (const Error& e) {
      if (e.code() != errc::resource_limit) throw;
      std::cerr << "note: eta brute force skipped (" << e.what() << ")\n";
      ok = true;
    }
    rep.consistency_flags["eta_bruteforce_matches"] = ok;
    if (!ok) fail(errc::internal_inconsistency, "eta brute force disagrees");
  }
  if (c.lambda0 <= 12 && c.m <= 15) {
    Int window = std::min<Int>(2 * rep.semigroup.conductor(), 2000);
    bool ok = pole_number_oracle(c, window) ==
              rep.semigroup.members_up_to(window);
    rep.consistency_flags["pole_oracle_matches"] = ok;
    if (!ok) fail(errc::internal_inconsistency, "pole oracle disagrees");
  }
}

void emit_report(const InfinitySemigroupReport& rep, const CommonOptions& opts,
                 const FamilyInstance* family = nullptr) {
  if (opts.json()) {
    auto j = report_to_json(rep);
    if (family) {
      nlohmann::ordered_json f;
      f["name"] = family->name;
      f["parameters"] = family->parameters;
      f["expected_generators"] = family->expected_generators;
      f["field_size"] = family->field_size;
      j["family"] = std::move(f);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (family) {
      std::cout << "family       : " << family->name << "\n";
      std::cout << "expected     : ";
      for (std::size_t i = 0; i < family->expected_generators.size(); ++i)
        std::cout << (i ? ", " : "") << family->expected_generators[i];
      std::cout << "\n";
    }
    std::cout << report_to_text(rep);
  }
}

int run_analyze(Int m, const std::vector<Int>& lambdas, std::optional<Int> p,
                const CommonOptions& opts) {
  auto rep = analyze_curve(m, lambdas, p, opts.limits_value());
  if (opts.check) run_extra_checks(rep, opts.limits_value());
  emit_report(rep, opts);
  return 0;
}

int run_family(const FamilyInstance& inst, const CommonOptions& opts) {
  auto rep = semigroup_at_infinity(inst.curve, opts.limits_value());
  if (opts.check) {
    auto expected =
        NumericalSemigroup::from_generators(inst.expected_generators,
                                            opts.limits_value().max_conductor);
    bool match = expected.gaps() == rep.semigroup.gaps();
    rep.consistency_flags["family_expected_generators_match"] = match;
    if (!match)
      fail(errc::internal_inconsistency,
           "family generators disagree with the pipeline");
    std::cerr << "check: expected generators match the computed semigroup\n";
    run_extra_checks(rep, opts.limits_value());
  }
  emit_report(rep, opts, &inst);
  return 0;
}

int run_castle(Int m, const std::vector<Int>& lambdas, Int field_size,
               Int points, const CommonOptions& opts) {
  auto rep = analyze_curve(m, lambdas, std::nullopt, opts.limits_value());
  auto a = assess(rep.curve, rep, field_size, points);
  if (opts.json())
    std::cout << assessment_to_json(rep, a).dump(2) << "\n";
  else
    std::cout << assessment_to_text(a);
  return 0;
}

int run_verify(const GridSpec& spec, const CommonOptions& opts) {
  auto summary = run_grid(spec);
  if (opts.json())
    std::cout << grid_summary_to_json(summary).dump(2) << "\n";
  else
    std::cout << grid_summary_to_text(summary);
  if (!summary.failures.empty()) {
    std::cerr << "error: " << summary.failures.size()
              << " grid cross-checks failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weierstrass semigroup at the place at infinity of "
               "y^m = prod (x - a_i)^{lambda_i} with gcd(m, sum lambda_i) = 1"};
  app.require_subcommand(1);

  CommonOptions opts;

  // analyze
  Int m = 0;
  std::vector<Int> lambdas;
  Int characteristic = 0;
  auto* analyze = app.add_subcommand("analyze", "Compute the semigroup for (m, lambdas)");
  analyze->add_option("--m", m, "Covering degree m >= 2")->required();
  analyze->add_option("--lambdas", lambdas, "Branch multiplicities, comma separated")
      ->required()
      ->delimiter(',');
  analyze->add_option("--characteristic", characteristic,
                      "Field characteristic (prime, must not divide m)");
  add_common(analyze, opts);

  // family
  auto* family = app.add_subcommand("family", "Run a named curve family");
  family->require_subcommand(1);
  Int fq = 0, fn = 0, fd = 0, fm = 0, fp = 0;
  auto* fam_ggs = family->add_subcommand("ggs", "Plane cover with m = q^n + 1");
  fam_ggs->add_option("--q", fq, "Prime power")->required();
  fam_ggs->add_option("--n", fn, "Odd integer >= 3")->required();
  add_common(fam_ggs, opts);
  auto* fam_bm = family->add_subcommand("bm", "Subcover with m | q^n + 1, d | q + 1");
  fam_bm->add_option("--q", fq, "Prime power")->required();
  fam_bm->add_option("--n", fn, "Odd integer >= 3")->required();
  fam_bm->add_option("--d", fd, "Divisor of q + 1")->required();
  fam_bm->add_option("--m", fm, "Divisor of q^n + 1 coprime to d(q-1)")->required();
  add_common(fam_bm, opts);
  auto* fam_herm = family->add_subcommand("hermitian", "y^{q+1} = x^q + x");
  fam_herm->add_option("--q", fq, "Prime power")->required();
  add_common(fam_herm, opts);
  auto* fam_trace = family->add_subcommand("trace", "y^{q+1} = trace-type polynomial");
  fam_trace->add_option("--q", fq, "q = p^e with e >= 2")->required();
  fam_trace->add_option("--p", fp, "Characteristic")->required();
  add_common(fam_trace, opts);

  // castle
  Int field_size = 0, points = 0;
  auto* castle = app.add_subcommand("castle", "Bounds and Castle verdicts for a point count");
  castle->add_option("--m", m, "Covering degree m >= 2")->required();
  castle->add_option("--lambdas", lambdas, "Branch multiplicities, comma separated")
      ->required()
      ->delimiter(',');
  castle->add_option("--field-size", field_size, "Square field size q^2")->required();
  castle->add_option("--points", points, "Number of rational places")->required();
  add_common(castle, opts);

  // verify
  GridSpec spec;
  std::vector<std::string> oracles = {"eta", "pole", "closure"};
  auto* verify = app.add_subcommand("verify", "Exhaustive cross-check sweep");
  verify->add_option("--max-m", spec.max_m, "Largest m")->capture_default_str();
  verify->add_option("--max-lambda0", spec.max_lambda0, "Largest multiplicity sum")
      ->capture_default_str();
  verify->add_option("--max-r", spec.max_r, "Largest number of branch points")
      ->capture_default_str();
  verify->add_option("--max-part", spec.max_lambda_part, "Largest single multiplicity")
      ->capture_default_str();
  verify->add_option("--oracles", oracles, "Subset of eta,pole,closure")
      ->delimiter(',')
      ->check(CLI::IsMember({"eta", "pole", "closure"}));
  add_common(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      std::optional<Int> p;
      if (analyze->count("--characteristic")) p = characteristic;
      return run_analyze(m, lambdas, p, opts);
    }
    if (*fam_ggs) return run_family(ggs(fq, fn), opts);
    if (*fam_bm) return run_family(bm_subcover(fq, fn, fd, fm), opts);
    if (*fam_herm) return run_family(hermitian(fq), opts);
    if (*fam_trace) return run_family(trace_curve(fq, fp), opts);
    if (*castle) return run_castle(m, lambdas, field_size, points, opts);
    if (*verify) {
      spec.oracle_eta = spec.oracle_pole = spec.oracle_closure = false;
      for (const auto& name : oracles) {
        if (name == "eta") spec.oracle_eta = true;
        if (name == "pole") spec.oracle_pole = true;
        if (name == "closure") spec.oracle_closure = true;
      }
      spec.limits = opts.limits_value();
      return run_verify(spec, opts);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
