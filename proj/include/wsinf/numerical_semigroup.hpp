#pragma once

#include <vector>

#include "wsinf/ints.hpp"

namespace wsinf {

namespace limits {
/// Construction refuses semigroups whose conductor exceeds this unless the
/// caller raises the cap explicitly.
inline constexpr Int kDefaultMaxConductor = 10'000'000;
}  // namespace limits

/// An additively closed subset of the nonnegative integers containing 0
/// with finite complement, represented by the least member of every residue
/// class modulo the multiplicity. Membership is O(1) for any integer, and
/// the finitely many gaps are materialized at construction time.
///
/// Immutable after construction; all operations are const and safe for
/// unrestricted concurrent reads.
class NumericalSemigroup {
 public:
  /// Defaults to the full semigroup <1>.
  NumericalSemigroup() : generators_{1}, class_min_{0} {}

  /// Additive closure of the given positive integers. Requires a nonempty
  /// list with gcd 1; duplicates and redundant generators are accepted.
  /// The least member of each residue class modulo the smallest generator
  /// is found by a Dijkstra sweep over the classes.
  static NumericalSemigroup from_generators(
      std::vector<Int> gens, Int max_conductor = limits::kDefaultMaxConductor);

  /// Original generators, deduplicated and sorted (not necessarily minimal).
  const std::vector<Int>& generators() const { return generators_; }

  /// Smallest n with [n, inf) contained in the semigroup; 0 when the
  /// semigroup is all of the nonnegative integers.
  Int conductor() const { return conductor_; }

  /// Largest gap, or -1 when there are none.
  Int frobenius() const { return conductor_ - 1; }

  /// Smallest nonzero member.
  Int multiplicity() const { return generators_.front(); }

  /// Number of gaps.
  Int genus() const { return static_cast<Int>(gaps_.size()); }

  /// All gaps in increasing order.
  const std::vector<Int>& gaps() const { return gaps_; }

  bool contains(Int n) const {
    if (n < 0) return false;
    return class_min_[n % static_cast<Int>(class_min_.size())] <= n;
  }

  /// frobenius() == 2 * genus() - 1. The full semigroup is symmetric under
  /// the convention frobenius = -1, genus = 0.
  bool is_symmetric() const { return frobenius() == 2 * genus() - 1; }

  /// {s in H : s - n not in H} for a nonzero member n, returned sorted.
  /// Has exactly n elements, one per residue class mod n, always with 0.
  std::vector<Int> apery_set(Int n) const;

  /// Given a transversal of the classes mod n contained in the semigroup,
  /// decides whether it is the Apery set of n by the floor-sum test:
  /// sum(floor(a/n)) equals the genus exactly for the Apery set.
  bool apery_criterion(const std::vector<Int>& candidate, Int n) const;

  /// Symmetry test through the Apery set of n: sorted as a_0 < ... <
  /// a_{n-1}, symmetric iff a_i + a_{n-1-i} = a_{n-1} for all i.
  bool symmetry_via_apery(Int n) const;

  /// The unique minimal generating system (members that are not a sum of
  /// two nonzero members), sorted.
  std::vector<Int> minimal_generators() const;

  Int embedding_dimension() const {
    return static_cast<Int>(minimal_generators().size());
  }

  /// Members in [0, w], sorted.
  std::vector<Int> members_up_to(Int w) const;

  bool operator==(const NumericalSemigroup& other) const {
    return conductor_ == other.conductor_ && gaps_ == other.gaps_;
  }

 private:
  std::vector<Int> generators_;
  // class_min_[c] = least member congruent to c modulo the multiplicity;
  // this is the Apery set of the multiplicity, indexed by residue.
  std::vector<Int> class_min_;
  std::vector<Int> gaps_;
  Int conductor_ = 0;
  Int max_conductor_ = limits::kDefaultMaxConductor;
};

/// Membership in the gap set of <n1, n2> for coprime n1, n2 >= 2, decided
/// without building the semigroup: x is a gap iff x = n1*n2 - a*n1 - b*n2
/// with a, b >= 1. Valid for any integer x (every negative x qualifies).
bool two_generator_gap_test(Int x, Int n1, Int n2);

}  // namespace wsinf
