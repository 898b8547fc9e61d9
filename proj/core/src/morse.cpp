#include "polyspace/morse.hpp"

#include <algorithm>

#include "polyspace/errors.hpp"
#include "polyspace/homology.hpp"

namespace polyspace {

namespace {

void require_ordered_generic(const LengthVector& ell) {
  if (!ell.is_ordered()) throw NotOrdered("length vector " + ell.to_string() + " is not ordered");
  require_generic(ell);
}

// Sum over j in {2,...,n} of u_j ell_j with u_j = -1 on J.
Rational signed_tail(const LengthVector& ell, SubsetMask j) {
  Rational s = 0;
  for (int k = 2; k <= ell.size(); ++k) s += j.contains(k) ? -ell.length(k) : ell.length(k);
  return s;
}

std::vector<SubsetMask> critical_sets(const LengthVector& ell) {
  const int n = ell.size();
  std::vector<SubsetMask> out;
  for (std::uint32_t raw = 0; raw < (1U << (n - 2)); ++raw) {
    const SubsetMask j(raw << 2);
    if (classify_subset(ell, j) == Shortness::Short && classify_subset(ell, j.with(1)) == Shortness::Long) out.push_back(j);
  }
  return out;
}

std::vector<SubsetMask> sorted_shorts(const ChamberSignature& sig) {
  std::vector<SubsetMask> v = sig.shorts;
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

}  // namespace

std::vector<CriticalPoint> critical_points(const LengthVector& ell) {
  require_ordered_generic(ell);
  const int n = ell.size();
  std::vector<CriticalPoint> out;
  for (SubsetMask j : critical_sets(ell)) {
    CriticalPoint q;
    q.j = j;
    q.index = j.size();
    for (int k = 1; k <= n; ++k) q.u.push_back(j.contains(k) ? -1 : 1);
    const Rational s = signed_tail(ell, j);
    q.t = (ell.length(1) * ell.length(1) - s * s) / (2 * (ell.length(1) + s));
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.t != b.t) return a.t < b.t;
    return canonical_less(a.j, b.j);
  });
  return out;
}

ReductionStep reduction(const LengthVector& ell) {
  require_ordered_generic(ell);
  const int n = ell.size();
  if (n < 4) throw OutOfRange("the reduction needs at least 4 bars");

  std::vector<Rational> target_entries;
  for (int k = 2; k <= n - 1; ++k) target_entries.push_back(ell.length(k));
  target_entries.push_back(ell.length(n) + ell.length(1));
  LengthVector target(target_entries);

  Rational slack = ell.length(1) / 2;
  for (SubsetMask j : critical_sets(ell)) slack = std::min(slack, Rational(ell.length(1) - signed_tail(ell, j)));
  for (std::uint32_t raw = 1; raw < (1U << (n - 1)); ++raw) {
    const SubsetMask k(raw << 1);
    const Rational imbalance = abs(2 * target.subset_sum(k) - target.total());
    if (imbalance > 0) slack = std::min(slack, Rational(imbalance / 2));
  }
  const Rational epsilon = slack / 2;

  std::vector<Rational> perturbed_entries(ell.entries().begin(), ell.entries().end());
  perturbed_entries.front() = epsilon;
  perturbed_entries.back() = ell.length(n) + ell.length(1) - epsilon;
  return {ell, std::move(target), LengthVector(perturbed_entries), epsilon};
}

SubsetBijectionReport check_subset_bijection(const LengthVector& ell) {
  const ReductionStep step = reduction(ell);
  const int n = ell.size();
  SubsetBijectionReport r;
  r.source = sorted_shorts(chamber_signature(ell));
  r.perturbed = sorted_shorts(chamber_signature(step.perturbed));

  // J is short for the perturbed vector iff J - {1}, shifted down by one, is
  // short for the target. A tie for the target can only occur with 1 not in
  // J (otherwise ell itself has the tie), and the -epsilon makes it short.
  std::vector<SubsetMask> via_target;
  for (std::uint32_t raw = 0; raw < (1U << (n - 1)); ++raw) {
    const SubsetMask j(raw << 1);
    SubsetMask shifted;
    for (int x : j.without(1).indices()) shifted = shifted.with(x - 1);
    const int sign = step.target.balance_sign(shifted.with(n - 1));
    const bool is_short = sign < 0 || (sign == 0 && !j.contains(1));
    if (is_short) via_target.push_back(j);
  }
  std::sort(via_target.begin(), via_target.end(), canonical_less);
  r.matches_target = via_target == r.perturbed;

  r.perturbed_is_subset = std::includes(r.source.begin(), r.source.end(), r.perturbed.begin(), r.perturbed.end(), canonical_less);
  std::set_difference(r.source.begin(), r.source.end(), r.perturbed.begin(), r.perturbed.end(), std::back_inserter(r.removed), canonical_less);
  const SubsetMask middle = SubsetMask::range(2, n - 1);
  for (const CriticalPoint& q : critical_points(ell)) r.expected.push_back(middle - q.j);
  std::sort(r.expected.begin(), r.expected.end(), canonical_less);
  return r;
}

IndexCensus index_census(const LengthVector& ell) {
  const int n = ell.size();
  IndexCensus c;
  for (const CriticalPoint& q : critical_points(ell)) c.critical_indices.push_back(q.index);
  for (SubsetMask k : check_subset_bijection(ell).removed) c.removed_indices.push_back(n - 2 - k.size());
  std::sort(c.critical_indices.begin(), c.critical_indices.end());
  std::sort(c.removed_indices.begin(), c.removed_indices.end());
  return c;
}

EulerCheck euler_check(const LengthVector& ell) {
  const int n = ell.size();
  EulerCheck e;
  e.chi = euler_characteristic(ell);
  if (n % 2 == 1) {
    for (const CriticalPoint& q : critical_points(ell)) e.predicted += (n - 2 - q.index) % 2 == 0 ? 2 : -2;
  }
  return e;
}

}  // namespace polyspace
