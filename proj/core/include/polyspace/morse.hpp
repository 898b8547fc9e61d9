#pragma once

#include <vector>

#include "polyspace/combinatorics.hpp"
#include "polyspace/rational.hpp"

namespace polyspace {

/// Critical point q_J of the height function t on the cobordism between
/// M_ell and M_{ell_t} at t = ell_1 - epsilon, where
/// ell_t = (ell_1 - t, ell_2, ..., ell_{n-1}, ell_n + t).
struct CriticalPoint {
  SubsetMask j;           // inside {2,...,n-1}
  int index = 0;          // |J|
  Rational t;             // critical value
  std::vector<int> u;     // u_1..u_n; -1 on J, +1 elsewhere
};

/// J inside {2,...,n-1} with J short and {1} u J long, sorted by t then by
/// canonical order. Throws NotOrdered and NonGeneric.
std::vector<CriticalPoint> critical_points(const LengthVector& ell);

struct ReductionStep {
  LengthVector source;
  LengthVector target;     // (ell_2, ..., ell_{n-1}, ell_n + ell_1)
  LengthVector perturbed;  // ell_t at t = ell_1 - epsilon
  Rational epsilon;
};

/// Needs ordered generic ell with n >= 4. epsilon is half the smallest slack
/// among: ell_1 - sum_{j>=2} u_j ell_j over the critical points, ell_1 / 2,
/// and half of every nonzero imbalance of the target vector.
ReductionStep reduction(const LengthVector& ell);

struct SubsetBijectionReport {
  std::vector<SubsetMask> source;     // shorts of ell
  std::vector<SubsetMask> perturbed;  // shorts of ell_{ell_1 - epsilon}
  std::vector<SubsetMask> removed;    // source minus perturbed
  std::vector<SubsetMask> expected;   // {2..n-1} - J over critical J
  bool perturbed_is_subset = false;
  bool matches_target = false;  // perturbed = {J : J - {1} shifted down is short for the target}
  bool pass() const { return perturbed_is_subset && matches_target && removed == expected; }
};

SubsetBijectionReport check_subset_bijection(const LengthVector& ell);

/// Multiset of critical indices against {n-2-|K| : K removed}, both sorted.
struct IndexCensus {
  std::vector<int> critical_indices;
  std::vector<int> removed_indices;
  bool pass() const { return critical_indices == removed_indices; }
};

IndexCensus index_census(const LengthVector& ell);

/// The boundary of the cobordism is M_ell and a circle bundle with Euler
/// characteristic 0, so chi(M_ell) = 2 * sum (-1)^(n-2-index) when the
/// cobordism has odd dimension n-2, and chi(M_ell) = 0 when it is even.
struct EulerCheck {
  long chi = 0;
  long predicted = 0;
  bool pass() const { return chi == predicted; }
};

EulerCheck euler_check(const LengthVector& ell);

}  // namespace polyspace
