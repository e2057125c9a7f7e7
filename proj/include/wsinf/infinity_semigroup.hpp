#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wsinf/kummer.hpp"
#include "wsinf/numerical_semigroup.hpp"

namespace wsinf {

struct Limits {
  Int max_conductor = limits::kDefaultMaxConductor;
  Int max_compositions = limits::kDefaultMaxCompositions;
};

/// Everything this library can say about the Weierstrass semigroup at the
/// single place over x = infinity: the block decomposition, the generator
/// sets, the materialized semigroup, the closed forms for gaps, Frobenius
/// number, multiplicity and Apery set, the symmetry verdicts, and the
/// results of the internal cross-checks (all of which must be true; a
/// false check aborts construction with InternalInconsistency).
struct InfinitySemigroupReport {
  KummerExtension curve;
  std::vector<Int> input_lambdas;  // echo of the caller's multiplicity order
  Int genus = 0;
  EtaSequence eta;
  std::vector<Int> epsilon;             // epsilon_0 .. epsilon_{lambda0-1}
  std::map<Int, std::vector<Int>> blocks;  // k -> {m*k - k'*lambda0}
  std::vector<Int> theorem_generators;  // {m, lambda0} plus one per block
  std::vector<Int> reduced_generators;  // pruned by first-occurrence eta level
  NumericalSemigroup semigroup;
  std::vector<Int> gap_set_closed_form;
  Int frobenius = 0;
  Int multiplicity = 0;
  bool symmetric = false;
  std::vector<Int> apery_lambda0;
  std::map<std::string, bool> consistency_flags;
};

/// Runs the whole construction for a validated curve: the strips
/// B_k = {m*k - k'*lambda0 : 1 <= k' <= eta_k} adjoined to <m, lambda0>,
/// their disjointness, the generator set, the materialized semigroup, and
/// every closed form, cross-checking each against the direct computation.
InfinitySemigroupReport semigroup_at_infinity(const KummerExtension& c,
                                              const Limits& limits = {});

/// Same pipeline, but records failing cross-checks in the returned list
/// instead of throwing. Used by the verification sweeps.
InfinitySemigroupReport semigroup_at_infinity_collect(
    const KummerExtension& c, const Limits& limits,
    std::vector<std::string>& failed_checks);

/// The generating set read off the strip decomposition: m, lambda0, and
/// the least element m*k - lambda0*eta_k of each strip.
std::vector<Int> theorem_generators(const KummerExtension& c,
                                    const EtaSequence& eta);

std::map<Int, std::vector<Int>> theorem_blocks(const KummerExtension& c,
                                               const EtaSequence& eta);

/// The gap set in closed form:
/// {m*a - b*lambda0 : 1 <= a <= lambda0-1, eta_a + 1 <= b <= floor(a*m/lambda0)}.
/// Sorted; an empty b-range contributes nothing; duplicates are a bug.
std::vector<Int> gap_set_closed_form(const KummerExtension& c,
                                     const EtaSequence& eta);

/// Frobenius number as max{epsilon_{r-1}, ..., epsilon_{lambda0-1}},
/// cross-checked against the restricted maximum over the indices with
/// eta_k = floor((k+1-r)m/lambda0).
Int frobenius_closed_form(const KummerExtension& c, const EtaSequence& eta);

/// Both routes to the Frobenius number, for callers that want to check
/// them independently.
std::pair<Int, Int> frobenius_closed_form_routes(const KummerExtension& c,
                                                 const EtaSequence& eta);

/// Multiplicity via the closed forms where they apply (all lambda coprime
/// to m, or all dividing m), falling back to the materialized semigroup
/// otherwise; always checked against the direct value.
Int multiplicity_closed_form(const KummerExtension& c, const EtaSequence& eta,
                             const NumericalSemigroup& h);
Int multiplicity_closed_form(const KummerExtension& c, const EtaSequence& eta);

/// Left: the Frobenius number equals epsilon_{r-1} and the semigroup is
/// symmetric. Right: every lambda_j divides m. The two are provably equal;
/// disagreement raises InternalInconsistency.
std::pair<bool, bool> symmetry_divisibility_test(const KummerExtension& c,
                                                 const EtaSequence& eta,
                                                 const NumericalSemigroup& h);
std::pair<bool, bool> symmetry_divisibility_test(const KummerExtension& c,
                                                 const EtaSequence& eta);

struct CoprimeCaseEquivalences {
  bool h_equals_m_r = false;   // semigroup equals <m, r>
  bool all_equal = false;      // lambda_1 = ... = lambda_r
  bool symmetric = false;
  bool applicable_iii = false;  // r < m, where symmetry joins the circle
};

/// Requires gcd(m, lambda_j) = 1 for every j (HypothesisNotMet otherwise).
/// Asserts h_equals_m_r == all_equal, and also == symmetric when r < m.
CoprimeCaseEquivalences coprime_case_equivalences(const KummerExtension& c,
                                                  const EtaSequence& eta,
                                                  const NumericalSemigroup& h);
CoprimeCaseEquivalences coprime_case_equivalences(const KummerExtension& c,
                                                  const EtaSequence& eta);

/// Apery set of lambda0 in closed form: {epsilon_k + lambda0 : 0 <= k <
/// lambda0}, sorted. Asserts one element per class mod lambda0, the
/// floor-sum genus identity, and set equality with the direct Apery set.
std::vector<Int> apery_at_lambda0(const KummerExtension& c,
                                  const EtaSequence& eta,
                                  const NumericalSemigroup& h);
std::vector<Int> apery_at_lambda0(const KummerExtension& c,
                                  const EtaSequence& eta);

/// Smaller generating set: {m, lambda0} when max lambda = 1, otherwise
/// {m, lambda0} plus m*k_i - lambda0*i for the first index k_i attaining
/// each eta level i in [floor(m/lambda), m - ceil(m/lambda)].
/// Asserts it generates the same semigroup.
std::vector<Int> reduced_generators(const KummerExtension& c,
                                    const EtaSequence& eta,
                                    const NumericalSemigroup& h);
std::vector<Int> reduced_generators(const KummerExtension& c,
                                    const EtaSequence& eta);

}  // namespace wsinf
