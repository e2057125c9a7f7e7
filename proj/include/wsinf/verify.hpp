#pragma once

#include <span>
#include <string>
#include <vector>

#include "wsinf/infinity_semigroup.hpp"

namespace wsinf {

/// Bounds for the exhaustive sweep over curve data, plus the selection of
/// heavy oracles to run on each case. The defaults cover 1123 distinct
/// curve data (lambda vectors counted as multisets).
struct GridSpec {
  Int max_m = 16;
  Int max_lambda0 = 14;
  Int max_r = 5;
  Int max_lambda_part = 5;
  bool oracle_eta = true;
  bool oracle_pole = false;
  bool oracle_closure = false;
  Limits limits{};
};

struct GridFailure {
  Int m = 0;
  std::vector<Int> lambdas;
  std::string check;
  std::string detail;
};

struct GridSummary {
  Int cases = 0;
  std::vector<GridFailure> failures;
};

/// Pole numbers in [0, window] of the monomials prod (x - alpha_i)^{s_i} *
/// y^{-t} that are regular outside infinity (s_i >= 0, any integer t,
/// s_i*m - lambda_i*t >= 0 for all i), closed under addition within the
/// window. This enumerates semigroup members from first principles, with
/// no reference to the eta sequence or the strip decomposition. Guarded
/// to lambda0 <= 12, m <= 15, window <= 2000.
std::vector<Int> pole_number_oracle(const KummerExtension& c, Int window);

/// Naive additive closure of a generator list within [0, window]; the
/// ground truth for semigroup membership at small scale.
std::vector<Int> closure_members_bruteforce(std::span<const Int> gens,
                                            Int window);

/// Iterates every valid curve datum within the bounds, in lexicographic
/// order of (m, r, lambda-vector) with the lambdas non-decreasing, and runs
/// the full pipeline with all cross-checks plus the selected oracles.
/// A healthy build produces zero failures.
GridSummary run_grid(const GridSpec& spec);

/// Enumerates the lambda multisets of the sweep for a fixed m (sorted
/// non-decreasing, valid against m). Exposed for the acceptance suite.
std::vector<std::vector<Int>> grid_lambda_vectors(const GridSpec& spec, Int m);

}  // namespace wsinf
