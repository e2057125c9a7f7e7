#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wsinf/castle.hpp"
#include "wsinf/infinity_semigroup.hpp"
#include "wsinf/verify.hpp"

namespace wsinf {

/// Runs the full pipeline for user-supplied data. The multiplicity list is
/// canonicalized (sorted) before computation; the report echoes the
/// caller's original order, which never affects any computed field.
InfinitySemigroupReport analyze_curve(Int m, std::vector<Int> lambdas,
                                      std::optional<Int> characteristic = {},
                                      const Limits& limits = {});

/// Stable machine-readable encoding, "schema": 1. All integers decimal.
nlohmann::ordered_json report_to_json(const InfinitySemigroupReport& rep);

/// Aligned k-table (eta, epsilon, strip) followed by one line per derived
/// quantity.
std::string report_to_text(const InfinitySemigroupReport& rep);

struct ReportInput {
  Int m = 0;
  std::vector<Int> lambdas;
};

/// Reads the "input" object back out of an emitted report.
ReportInput input_from_json(const nlohmann::json& j);

nlohmann::ordered_json assessment_to_json(const InfinitySemigroupReport& rep,
                                          const CastleAssessment& a);
std::string assessment_to_text(const CastleAssessment& a);

nlohmann::ordered_json grid_summary_to_json(const GridSummary& summary);
std::string grid_summary_to_text(const GridSummary& summary);

}  // namespace wsinf
