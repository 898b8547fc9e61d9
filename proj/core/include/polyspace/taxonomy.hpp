#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyspace/combinatorics.hpp"
#include "polyspace/homology.hpp"

namespace polyspace {

struct ChamberCatalog;

/// Empty, disconnected, normal, or special with its type (a long 3-subset of
/// {1,...,n-1}).
struct ChamberClass {
  enum class Kind { Empty, Disconnected, Normal, Special };
  Kind kind = Kind::Empty;
  SubsetMask type;  // set only for Special

  bool is_special() const { return kind == Kind::Special; }
  bool is_connected() const { return kind == Kind::Normal || kind == Kind::Special; }
  /// "empty", "disconnected", "normal" or "special {i,j,k}".
  std::string to_string() const;
  /// Parses the output of to_string().
  static ChamberClass parse(const std::string& text);
  bool operator==(const ChamberClass&) const = default;
};

/// The special types split into four families.
enum class TypeFamily {
  PairTop,     // {i, n-2, n-1}, 1 <= i <= n-4
  TopTriple,   // {n-3, n-2, n-1}
  SkipOne,     // {n-4, n-3, n-1}
  LowTriple,   // {n-4, n-3, n-2}
};

struct TypeInfo {
  TypeFamily family;
  int i = 0;  // the free index for PairTop
};

/// Family of a special type; std::nullopt if the triple is not one of the
/// possible types.
std::optional<TypeInfo> type_family(SubsetMask type, int n);

ChamberClass classify(const ChamberSignature& sig);
/// Throws NonGeneric.
ChamberClass classify(const LengthVector& ell);

/// Number of I in S_k not contained in any member of S_{k+i}; this is the
/// rank of A^k_i. Requires a connected chamber, k >= 1, i >= 1, k+i <= n-3
/// (OutOfRange otherwise).
int annihilator_rank_combinatorial(const ChamberSignature& sig, int k, int i);
int annihilator_rank_combinatorial(const LengthVector& ell, int k, int i);

/// Same count but returning 0 for index pairs outside the valid range.
int annihilator_rank_or_zero(const ChamberSignature& sig, int k, int i);

struct DInvariants {
  int d1 = 0;  // rank A^1_{n-5}
  int d2 = 0;  // rank A^2_{n-6}
  int d3 = 0;  // rank A^{n-5}_1
  bool operator==(const DInvariants&) const = default;
};

/// Throws NotSpecial for non-special chambers.
DInvariants d_invariants(const ChamberSignature& sig);
DInvariants d_invariants(const LengthVector& ell);

/// Closed-form first (and where available second) Betti number of a special
/// chamber, compared against the stratum counts.
struct BettiCrosscheck {
  int formula_case = 0;  // 1: {n-4,n-3,n-2}, 2: {n-4,n-3,n-1}, 3: {n-3,n-2,n-1}, 4: {i,n-2,n-1}
  int b1_formula = 0;
  int b1_actual = 0;
  std::optional<int> b2_formula;
  std::optional<int> b2_actual;
  bool pass = false;
};

BettiCrosscheck bettispecial_crosscheck(const ChamberSignature& sig);
BettiCrosscheck bettispecial_crosscheck(const LengthVector& ell);

struct SametypeViolation {
  std::size_t first = 0;   // catalog indices
  std::size_t second = 0;
};

struct SametypeReport {
  std::size_t special_chambers = 0;
  std::size_t pairs_checked = 0;
  std::vector<SametypeViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Any two special chambers sharing Betti numbers and (d1,d2,d3) must have
/// the same type.
SametypeReport sametype_separation(const ChamberCatalog& catalog);

}  // namespace polyspace
