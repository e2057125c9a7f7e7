#include "wsinf/numerical_semigroup.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace wsinf {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens,
                                                       Int max_conductor) {
  if (gens.empty()) fail(errc::empty_generators, "generator list is empty");
  for (Int g : gens) {
    if (g < 1)
      fail(errc::non_positive_generator,
           "generators must be positive, got " + std::to_string(g));
  }
  if (max_conductor < 0)
    fail(errc::invalid_parameter, "conductor cap must be nonnegative");

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Int g = 0;
  for (Int x : gens) g = std::gcd(g, x);
  if (g != 1)
    fail(errc::gcd_not_one, "gcd of generators is " + std::to_string(g) +
                                "; must be 1 for a finite complement");

  NumericalSemigroup s;
  s.generators_ = std::move(gens);
  s.max_conductor_ = max_conductor;

  const Int a = s.generators_.front();
  if (a == 1) {
    // The full semigroup: no gaps, conductor 0, frobenius -1.
    s.class_min_ = {0};
    s.conductor_ = 0;
    return s;
  }
  // a - 1 is always a gap, so the conductor is at least a.
  if (a > max_conductor)
    fail(errc::resource_limit,
         "conductor would exceed the cap of " + std::to_string(max_conductor));

  // Least member of each residue class mod a, by Dijkstra over the classes:
  // an edge c -> (c + g) mod a of weight g for every other generator g.
  const Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(a), kInf);
  dist[0] = 0;
  using Node = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [d, c] = queue.top();
    queue.pop();
    if (d != dist[c]) continue;
    for (Int gen : s.generators_) {
      if (gen % a == 0) continue;  // stays in the class, never improves
      Int nd = checked_add(d, gen);
      Int nc = (c + gen) % a;
      if (nd < dist[nc]) {
        dist[nc] = nd;
        queue.push({nd, nc});
      }
    }
  }
  // gcd 1 guarantees every class is reachable.
  Int max_class_min = *std::max_element(dist.begin(), dist.end());
  Int conductor = checked_sub(max_class_min, a - 1);
  if (conductor > max_conductor)
    fail(errc::resource_limit,
         "conductor " + std::to_string(conductor) + " exceeds the cap of " +
             std::to_string(max_conductor));

  s.class_min_ = std::move(dist);
  s.conductor_ = conductor;
  for (Int n = 1; n < conductor; ++n)
    if (s.class_min_[n % a] > n) s.gaps_.push_back(n);
  return s;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n < 1 || !contains(n))
    fail(errc::not_a_member,
         std::to_string(n) + " is not a nonzero member of the semigroup");
  if (n > max_conductor_)
    fail(errc::resource_limit, "apery_set argument exceeds the resource cap");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int c = 0; c < n; ++c) {
    Int v = c;
    while (!contains(v)) v = checked_add(v, n);
    out.push_back(v);  // least member of the class; v - n is not a member
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool NumericalSemigroup::apery_criterion(const std::vector<Int>& candidate,
                                         Int n) const {
  if (n < 1) fail(errc::precondition_violated, "modulus must be positive");
  if (static_cast<Int>(candidate.size()) != n)
    fail(errc::precondition_violated,
         "candidate must have exactly n elements");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Int v : candidate) {
    if (!contains(v))
      fail(errc::precondition_violated,
           "candidate contains the non-member " + std::to_string(v));
    Int c = v % n;
    if (seen[c])
      fail(errc::precondition_violated,
           "candidate is not a transversal of the classes mod n");
    seen[c] = 1;
  }
  Int total = 0;
  for (Int v : candidate) total = checked_add(total, v / n);
  return total == genus();
}

bool NumericalSemigroup::symmetry_via_apery(Int n) const {
  std::vector<Int> ap = apery_set(n);  // sorted; validates membership of n
  Int top = ap.back();
  for (std::size_t i = 0; i < ap.size(); ++i)
    if (ap[i] + ap[ap.size() - 1 - i] != top) return false;
  return true;
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
  if (multiplicity() == 1) return {1};
  // Every minimal generator is the multiplicity or a nonzero element of its
  // Apery set; anything else splits off the multiplicity.
  std::vector<Int> out;
  for (std::size_t c = 0; c < class_min_.size(); ++c) {
    Int n = (c == 0) ? multiplicity() : class_min_[c];
    bool decomposable = false;
    for (Int x = multiplicity(); x <= n - x; ++x) {
      if (contains(x) && contains(n - x)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> NumericalSemigroup::members_up_to(Int w) const {
  std::vector<Int> out;
  for (Int n = 0; n <= w; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

bool two_generator_gap_test(Int x, Int n1, Int n2) {
  if (n1 < 2 || n2 < 2)
    fail(errc::precondition_violated, "both moduli must be at least 2");
  if (std::gcd(n1, n2) != 1)
    fail(errc::precondition_violated, "the two generators must be coprime");
  // x = n1*n2 - a*n1 - b*n2 forces a*n1 = -x (mod n2); the smallest positive
  // choice of a maximizes b, so x is representable iff that b is >= 1.
  Int inv = mod_inverse(n1 % n2, n2);
  Int target = ((-x % n2) + n2) % n2;
  Int a = static_cast<Int>(
      static_cast<__int128>(target) * static_cast<__int128>(inv) %
      static_cast<__int128>(n2));
  if (a == 0) a = n2;
  Int num = checked_sub(checked_sub(checked_mul(n1, n2), checked_mul(a, n1)), x);
  return num >= n2;  // num is a multiple of n2 by construction
}

}  // namespace wsinf
