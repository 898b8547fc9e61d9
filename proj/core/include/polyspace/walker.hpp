#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyspace/chambers.hpp"
#include "polyspace/exterior_algebra.hpp"
#include "polyspace/taxonomy.hpp"

namespace polyspace {

/// Invariants of the graded cohomology ring. The class tag is a ring
/// invariant too: emptiness and connectedness are read off b_0, special
/// chambers are detected by the cohomology, and the type is fixed by the
/// Betti numbers together with d_1, d_2, d_3.
struct Fingerprint {
  int n = 0;
  BettiVector betti;
  std::vector<int> h1_ranks;                  // empty for empty or disconnected spaces
  std::map<std::pair<int, int>, int> ann_table;  // (k, i) -> rank A^k_i
  ChamberClass class_tag;

  /// Deterministic one-line rendering.
  std::string serialize() const;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const ChamberSignature& sig);
Fingerprint fingerprint(const LengthVector& ell);

/// How a pair of chambers is told apart: 1 Betti numbers, 2 the rest of the
/// fingerprint, 3 the complex of a face-ring subring, 4 a rigidity theorem
/// for the common type; 0 means unexplained.
struct PairVerdict {
  std::size_t first = 0;
  std::size_t second = 0;
  int tier = 0;
  std::string witness;
};

struct WalkerReport {
  int n = 0;
  std::size_t chambers = 0;
  std::vector<PairVerdict> pairs;
  std::map<int, std::size_t> tier_counts;
  /// Every pair whose face-ring complexes were isomorphic had equal face counts.
  bool face_counts_consistent = true;

  std::size_t unexplained() const;
  /// Zero unexplained pairs, tier 1 suffices for n <= 5 and some pair needs
  /// a higher tier for n = 6.
  bool pass() const;
};

/// Throws OutOfRange unless 3 <= n <= 7.
WalkerReport verify_walker(int n, int jobs = 1);
WalkerReport verify_walker(const ChamberCatalog& catalog);

/// The complex whose exterior face ring the presentation is, when every
/// relation is a single monomial.
std::optional<SimplicialComplex> face_ring_complex(const RingPresentation& p);

/// Signed generator correspondence g_i -> sign_i * h_{target_i} carrying
/// each ideal into the other.
struct SignedBijection {
  std::vector<int> target;
  std::vector<int> sign;
};

/// Searches signed generator bijections with degree-profile pruning. A
/// result is a certified isomorphism; std::nullopt only rules out
/// isomorphisms of this monomial form.
std::optional<SignedBijection> presentation_equivalent_monomial(const RingPresentation& p1, const RingPresentation& p2);

}  // namespace polyspace
