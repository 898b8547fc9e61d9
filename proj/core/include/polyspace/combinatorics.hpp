#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

/// Largest supported number of bars.
inline constexpr int kMaxBars = 24;

/// Subset J of the ground set {1,...,n}; index i lives in bit i (bit 0 unused).
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> indices);
  static SubsetMask of(std::span<const int> indices);
  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static SubsetMask range(int lo, int hi);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  /// Largest index, 0 for the empty set.
  constexpr int max() const { return bits_ == 0 ? 0 : 31 - std::countl_zero(bits_); }
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_); }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(SubsetMask other) const { return (bits_ & other.bits_) != 0; }

  constexpr SubsetMask with(int i) const { return SubsetMask(bits_ | (1U << i)); }
  constexpr SubsetMask without(int i) const { return SubsetMask(bits_ & ~(1U << i)); }
  /// Complement inside {1,...,n}.
  constexpr SubsetMask complement(int n) const { return SubsetMask(~bits_ & full_bits(n)); }

  /// Ascending 1-based indices.
  std::vector<int> indices() const;
  /// "{1,3,4}" (and "{}" for the empty set).
  std::string to_string() const;

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
  constexpr auto operator<=>(const SubsetMask&) const = default;

  static constexpr std::uint32_t full_bits(int n) {
    return n <= 0 ? 0U : static_cast<std::uint32_t>(((std::uint64_t{1} << (n + 1)) - 1) & ~std::uint64_t{1});
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Presentation order used for every serialized family of subsets:
/// by cardinality, then lexicographically on the ascending index lists.
bool canonical_less(SubsetMask a, SubsetMask b);

/// A length vector ell = (ell_1,...,ell_n) of positive exact rationals, n >= 3.
class LengthVector {
 public:
  explicit LengthVector(std::vector<Rational> entries);
  /// Comma separated rationals, e.g. "1,1,2,2,3" or "1/2,1,3/2".
  static LengthVector parse(std::string_view text);
  static LengthVector of(std::initializer_list<long> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  /// 1-based access, matching the subset indexing.
  const Rational& length(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const Rational> entries() const { return entries_; }
  const Rational& total() const { return total_; }
  bool is_ordered() const;

  /// sum of the lengths indexed by J, exact.
  Rational subset_sum(SubsetMask j) const;
  /// sign of (sum over J) - (sum over complement): -1 short, 0 degenerate, +1 long.
  int balance_sign(SubsetMask j) const;

  /// Comma separated canonical rationals.
  std::string to_string() const;

  bool operator==(const LengthVector& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Rational> entries_;
  Rational total_;
  // The lengths scaled to a common denominator; the 64-bit copy is populated
  // whenever twice the scaled total fits, which keeps subset scans cheap.
  std::vector<Integer> scaled_;
  std::vector<std::int64_t> scaled64_;
  Integer scaled_total_;
  std::int64_t scaled_total64_ = 0;
  bool fits64_ = false;
};

enum class Shortness { Short, Long, Degenerate };

std::string_view to_string(Shortness s);

Shortness classify_subset(const LengthVector& ell, SubsetMask j);

/// No subset has sum equal to half the total.
bool is_generic(const LengthVector& ell);

/// Throws NonGeneric unless is_generic(ell).
void require_generic(const LengthVector& ell);

struct OrderedLengths {
  LengthVector ordered;
  /// permutation[k-1] = sigma(k): the original index of the k-th entry of the
  /// ordered vector, so ordered = (ell_sigma(1), ..., ell_sigma(n)).
  std::vector<int> permutation;
};

/// Stable sort; equal entries keep their input order.
OrderedLengths order_and_track(const LengthVector& ell);

/// k-subsets J of {1,...,n-1} with J u {n} short, in canonical order. For an
/// unordered ell the sets are computed on the ordered representative and
/// reported in the original indexing. Throws NonGeneric.
std::vector<SubsetMask> short_sets(const LengthVector& ell, int k);

/// Order of subsets: J1 <= J2 iff there is an order preserving injection
/// phi: J1 -> J2 with x <= phi(x).
bool poset_leq(SubsetMask j1, SubsetMask j2);

/// Subsets J of {1,...,n-1} with |J| <= n-3, listed in a linear extension of
/// poset_leq (cardinality, then index sum, then canonical order).
std::vector<SubsetMask> poset_elements(int n);

/// The family of J in {1,...,n-1} with J u {n} short for the ordered
/// representative. Identifies the chamber up to permutation.
struct ChamberSignature {
  int n = 0;
  std::vector<SubsetMask> shorts;  // canonical order

  bool contains(SubsetMask j) const;
  /// Members of cardinality k.
  std::vector<SubsetMask> stratum(int k) const;
  /// a_k = |stratum(k)| for k = 0..n-3.
  std::vector<int> stratum_sizes() const;
  bool operator==(const ChamberSignature&) const = default;
};

/// Lexicographic comparison of the canonical member lists (n first).
bool signature_less(const ChamberSignature& a, const ChamberSignature& b);

/// Maximal elements of a signature under poset_leq.
struct GeneticCode {
  int n = 0;
  std::vector<SubsetMask> antichain;  // canonical order
  bool operator==(const GeneticCode&) const = default;
};

ChamberSignature chamber_signature(const LengthVector& ell);

GeneticCode genetic_code(const ChamberSignature& sig);

/// All poset elements below some member of the antichain.
ChamberSignature down_closure(const GeneticCode& code);

/// True iff the members are pairwise incomparable under poset_leq.
bool is_antichain(std::span<const SubsetMask> masks);

/// Equality of chamber signatures. Throws NonGeneric or DimensionMismatch.
bool same_chamber(const LengthVector& a, const LengthVector& b);

}  // namespace polyspace
