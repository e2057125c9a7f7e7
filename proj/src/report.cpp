#include "wsinf/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace wsinf {

using nlohmann::ordered_json;

InfinitySemigroupReport analyze_curve(Int m, std::vector<Int> lambdas,
                                      std::optional<Int> characteristic,
                                      const Limits& limits) {
  std::vector<Int> echo = lambdas;
  std::sort(lambdas.begin(), lambdas.end());
  auto curve = KummerExtension::create(m, std::move(lambdas), characteristic);
  auto rep = semigroup_at_infinity(curve, limits);
  rep.input_lambdas = std::move(echo);
  return rep;
}

ordered_json report_to_json(const InfinitySemigroupReport& rep) {
  ordered_json j;
  j["schema"] = 1;
  j["input"] = {{"m", rep.curve.m}, {"lambdas", rep.input_lambdas}};
  j["lambda0"] = rep.curve.lambda0;
  j["r"] = rep.curve.r();
  j["genus"] = rep.genus;
  j["eta"] = rep.eta.values();
  j["epsilon"] = rep.epsilon;
  ordered_json blocks = ordered_json::object();
  for (const auto& [k, strip] : rep.blocks) blocks[std::to_string(k)] = strip;
  j["blocks"] = std::move(blocks);
  j["theorem_generators"] = rep.theorem_generators;
  j["reduced_generators"] = rep.reduced_generators;
  j["minimal_generators"] = rep.semigroup.minimal_generators();
  j["gaps"] = rep.semigroup.gaps();
  j["frobenius"] = rep.frobenius;
  j["multiplicity"] = rep.multiplicity;
  j["symmetric"] = rep.symmetric;
  j["apery_lambda0"] = rep.apery_lambda0;
  ordered_json checks = ordered_json::object();
  for (const auto& [name, ok] : rep.consistency_flags) checks[name] = ok;
  j["checks"] = std::move(checks);
  return j;
}

ReportInput input_from_json(const nlohmann::json& j) {
  ReportInput in;
  const auto& input = j.at("input");
  in.m = input.at("m").get<Int>();
  in.lambdas = input.at("lambdas").get<std::vector<Int>>();
  return in;
}

namespace {

std::string join_ints(const std::vector<Int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string report_to_text(const InfinitySemigroupReport& rep) {
  std::ostringstream os;
  os << "m            : " << rep.curve.m << "\n";
  os << "lambdas      : " << join_ints(rep.input_lambdas) << "\n";
  os << "lambda0      : " << rep.curve.lambda0 << "\n";
  os << "r            : " << rep.curve.r() << "\n";
  os << "genus        : " << rep.genus << "\n";

  os << "\n    k    eta  epsilon  strip\n";
  for (Int k = 0; k < rep.curve.lambda0; ++k) {
    os << "  " << std::setw(3) << k << "  " << std::setw(5)
       << rep.eta.at_extended(k) << "  " << std::setw(7)
       << rep.epsilon[static_cast<std::size_t>(k)] << "  ";
    auto it = rep.blocks.find(k);
    if (it != rep.blocks.end() && !it->second.empty()) {
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        if (i) os << " ";
        os << it->second[i];
      }
    } else {
      os << "-";
    }
    os << "\n";
  }
  os << "\n";
  os << "theorem generators : " << join_ints(rep.theorem_generators) << "\n";
  os << "reduced generators : " << join_ints(rep.reduced_generators) << "\n";
  os << "minimal generators : " << join_ints(rep.semigroup.minimal_generators())
     << "\n";
  os << "gaps               : " << join_ints(rep.semigroup.gaps()) << "\n";
  os << "frobenius          : " << rep.frobenius << "\n";
  os << "multiplicity       : " << rep.multiplicity << "\n";
  os << "symmetric          : " << (rep.symmetric ? "yes" : "no") << "\n";
  os << "apery(lambda0)     : " << join_ints(rep.apery_lambda0) << "\n";
  Int passed = 0;
  for (const auto& [name, ok] : rep.consistency_flags)
    if (ok) ++passed;
  os << "cross-checks       : " << passed << "/" << rep.consistency_flags.size()
     << " ok\n";
  return os.str();
}

ordered_json assessment_to_json(const InfinitySemigroupReport& rep,
                                const CastleAssessment& a) {
  ordered_json j;
  j["schema"] = 1;
  j["input"] = {{"m", rep.curve.m},
                {"lambdas", rep.input_lambdas},
                {"field_size", a.field_size},
                {"points", a.point_count}};
  j["genus"] = a.genus;
  j["multiplicity"] = a.multiplicity;
  j["symmetric"] = a.symmetric;
  j["lewittes_bound"] = a.lewittes;
  j["hasse_weil_bound"] = a.hasse_weil;
  j["verdicts"] = {{"is_maximal", a.is_maximal},
                   {"meets_lewittes_with_equality", a.meets_lewittes_with_equality},
                   {"is_castle", a.is_castle},
                   {"m_equals_q_plus_1", a.m_equals_q_plus_1},
                   {"all_lambda_equal", a.all_lambda_equal}};
  j["hypotheses_hold"] = a.hypotheses_hold;
  j["equivalence_ok"] = a.equivalence_ok;
  return j;
}

std::string assessment_to_text(const CastleAssessment& a) {
  std::ostringstream os;
  os << "field size         : " << a.field_size << "\n";
  os << "points             : " << a.point_count << "\n";
  os << "genus              : " << a.genus << "\n";
  os << "multiplicity       : " << a.multiplicity << "\n";
  os << "symmetric          : " << (a.symmetric ? "yes" : "no") << "\n";
  os << "lewittes bound     : " << a.lewittes << "\n";
  os << "hasse-weil bound   : " << a.hasse_weil << "\n";
  os << "maximal            : " << (a.is_maximal ? "yes" : "no") << "\n";
  os << "lewittes equality  : "
     << (a.meets_lewittes_with_equality ? "yes" : "no") << "\n";
  os << "castle             : " << (a.is_castle ? "yes" : "no") << "\n";
  os << "maximal castle     : "
     << (a.is_maximal && a.is_castle ? "yes" : "no") << "\n";
  return os.str();
}

ordered_json grid_summary_to_json(const GridSummary& summary) {
  ordered_json j;
  j["schema"] = 1;
  j["cases"] = summary.cases;
  ordered_json failures = ordered_json::array();
  for (const auto& f : summary.failures) {
    failures.push_back({{"m", f.m},
                        {"lambdas", f.lambdas},
                        {"check", f.check},
                        {"detail", f.detail}});
  }
  j["failures"] = std::move(failures);
  return j;
}

std::string grid_summary_to_text(const GridSummary& summary) {
  std::ostringstream os;
  os << "cases    : " << summary.cases << "\n";
  os << "failures : " << summary.failures.size() << "\n";
  for (const auto& f : summary.failures) {
    os << "  m=" << f.m << " lambdas=" << join_ints(f.lambdas) << " "
       << f.check << ": " << f.detail << "\n";
  }
  return os.str();
}

}  // namespace wsinf
