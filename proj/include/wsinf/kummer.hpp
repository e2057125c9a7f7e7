#pragma once

#include <optional>
#include <vector>

#include "wsinf/ints.hpp"

namespace wsinf {

namespace limits {
/// Cap on the number of compositions the exponential eta search may visit.
inline constexpr Int kDefaultMaxCompositions = 10'000'000;
}  // namespace limits

/// The degree-m cyclic cover y^m = prod (x - alpha_i)^{lambda_i} with a
/// single place above x = infinity, recorded up to the data the semigroup
/// there actually depends on: m and the multiset of branch multiplicities.
/// The roots alpha_i are irrelevant and deliberately not stored.
struct KummerExtension {
  Int m = 0;
  std::vector<Int> lambdas;  // order preserved as given; semantically a multiset
  Int lambda0 = 0;           // sum of the lambdas
  std::optional<Int> characteristic;  // optional prime p with p not dividing m

  Int r() const { return static_cast<Int>(lambdas.size()); }

  /// Validates m >= 2, r >= 2, 1 <= lambda_i < m, gcd(m, lambda0) = 1, and
  /// (when given) that the characteristic is a prime not dividing m.
  static KummerExtension create(Int m, std::vector<Int> lambdas,
                                std::optional<Int> characteristic = std::nullopt);

  bool all_lambda_divide_m() const;
  bool all_lambda_coprime_to_m() const;
  bool all_lambda_equal() const;
  Int max_lambda() const;
};

/// Genus of the cover: ((m-1)(r-1) + r - sum gcd(m, lambda_i)) / 2.
Int curve_genus(const KummerExtension& c);

/// The non-decreasing sequence eta_r <= ... <= eta_{lambda0-1} driving the
/// structure of the semigroup at infinity, together with its extension
/// eta_s = 0 for s < r and eta_s = m - 1 for s >= lambda0.
class EtaSequence {
 public:
  /// Empty placeholder; real sequences come from eta_sequence().
  EtaSequence() : m_(1), r_(0), lambda0_(0) {}

  EtaSequence(Int m, Int r, Int lambda0, std::vector<Int> values);

  Int at_extended(Int s) const {
    if (s < r_) return 0;
    if (s >= lambda0_) return m_ - 1;
    return values_[static_cast<std::size_t>(s - r_)];
  }

  /// eta_r .. eta_{lambda0-1}; empty when r = lambda0.
  const std::vector<Int>& values() const { return values_; }
  Int m() const { return m_; }
  Int r() const { return r_; }
  Int lambda0() const { return lambda0_; }

 private:
  Int m_, r_, lambda0_;
  std::vector<Int> values_;
};

/// Fast construction of the eta sequence: the multiset
/// { floor(s*m/lambda_i) : 1 <= s < lambda_i } sorted in non-decreasing
/// order equals (eta_r, ..., eta_{lambda0-1}).
EtaSequence eta_sequence(const KummerExtension& c);

/// Definition-level computation of eta_k: the maximum over all compositions
/// (s_1, ..., s_r) with sum k and 1 <= s_i <= lambda_i of
/// min_i floor(s_i*m/lambda_i). Exponential; guarded by a composition cap.
Int eta_bruteforce(const KummerExtension& c, Int k,
                   Int max_compositions = limits::kDefaultMaxCompositions);

/// epsilon_k = m*k - lambda0*(eta_k + 1), defined for every k >= 0 through
/// the extended eta sequence. May be negative.
Int epsilon_value(const KummerExtension& c, const EtaSequence& eta, Int k);

}  // namespace wsinf
