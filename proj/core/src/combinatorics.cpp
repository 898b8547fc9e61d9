#include "polyspace/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polyspace/errors.hpp"

namespace polyspace {

// ---------------------------------------------------------------- SubsetMask

SubsetMask SubsetMask::of(std::initializer_list<int> indices) {
  return of(std::span<const int>(indices.begin(), indices.size()));
}

SubsetMask SubsetMask::of(std::span<const int> indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxBars) throw OutOfRange("subset index " + std::to_string(i) + " outside 1.." + std::to_string(kMaxBars));
    bits |= 1U << i;
  }
  return SubsetMask(bits);
}

SubsetMask SubsetMask::range(int lo, int hi) {
  std::uint32_t bits = 0;
  for (int i = std::max(lo, 1); i <= hi; ++i) bits |= 1U << i;
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool canonical_less(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Lexicographic on ascending lists: the first differing index decides, and
  // the list holding the smaller index at that position comes first.
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

// -------------------------------------------------------------- LengthVector

LengthVector::LengthVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n < 3) throw OutOfRange("a length vector needs at least 3 entries, got " + std::to_string(n));
  if (n > kMaxBars) throw OutOfRange("at most " + std::to_string(kMaxBars) + " bars are supported, got " + std::to_string(n));
  Integer common_den = 1;
  for (auto& q : entries_) {
    q.canonicalize();
    if (sgn(q) <= 0) throw DomainError("length vector entries must be positive, got " + polyspace::to_string(q));
    total_ += q;
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), q.get_den_mpz_t());
  }
  scaled_.reserve(entries_.size());
  for (const auto& q : entries_) {
    Integer s = q.get_num() * (common_den / q.get_den());
    scaled_total_ += s;
    scaled_.push_back(std::move(s));
  }
  // Subset scans compare 2 * sum against the total.
  const Integer limit = Integer(1) << 61;
  fits64_ = scaled_total_ < limit;
  if (fits64_) {
    scaled64_.reserve(scaled_.size());
    for (const auto& s : scaled_) scaled64_.push_back(s.get_si());
    scaled_total64_ = scaled_total_.get_si();
  }
}

LengthVector LengthVector::parse(std::string_view text) { return LengthVector(parse_rational_list(text)); }

LengthVector LengthVector::of(std::initializer_list<long> entries) {
  std::vector<Rational> v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return LengthVector(std::move(v));
}

bool LengthVector::is_ordered() const { return std::is_sorted(entries_.begin(), entries_.end()); }

Rational LengthVector::subset_sum(SubsetMask j) const {
  Rational s = 0;
  for (int i : j.indices()) {
    if (i > size()) throw OutOfRange("subset " + j.to_string() + " exceeds ground set of size " + std::to_string(size()));
    s += length(i);
  }
  return s;
}

int LengthVector::balance_sign(SubsetMask j) const {
  if (!j.subset_of(SubsetMask(SubsetMask::full_bits(size())))) {
    throw OutOfRange("subset " + j.to_string() + " exceeds ground set of size " + std::to_string(size()));
  }
  if (fits64_) {
    std::int64_t s = 0;
    for (std::uint32_t b = j.bits(); b != 0; b &= b - 1) s += scaled64_[static_cast<std::size_t>(std::countr_zero(b) - 1)];
    const std::int64_t d = 2 * s - scaled_total64_;
    return (d > 0) - (d < 0);
  }
  Integer s = 0;
  for (std::uint32_t b = j.bits(); b != 0; b &= b - 1) s += scaled_[static_cast<std::size_t>(std::countr_zero(b) - 1)];
  return sgn(Integer(2 * s - scaled_total_));
}

std::string LengthVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += polyspace::to_string(entries_[i]);
  }
  return s;
}

// ------------------------------------------------------------------ shortness

std::string_view to_string(Shortness s) {
  switch (s) {
    case Shortness::Short: return "short";
    case Shortness::Long: return "long";
    case Shortness::Degenerate: return "degenerate";
  }
  return "?";
}

Shortness classify_subset(const LengthVector& ell, SubsetMask j) {
  const int sign = ell.balance_sign(j);
  if (sign < 0) return Shortness::Short;
  if (sign > 0) return Shortness::Long;
  return Shortness::Degenerate;
}

bool is_generic(const LengthVector& ell) {
  // J is degenerate iff its complement is, so subsets avoiding n suffice.
  const int m = ell.size() - 1;
  const std::uint32_t count = 1U << m;
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t gray = i ^ (i >> 1);
    if (ell.balance_sign(SubsetMask(gray << 1)) == 0) return false;
  }
  return true;
}

void require_generic(const LengthVector& ell) {
  if (!is_generic(ell)) throw NonGeneric("(" + ell.to_string() + ") lies on a wall sum_J = sum_{not J}");
}

OrderedLengths order_and_track(const LengthVector& ell) {
  std::vector<int> perm(static_cast<std::size_t>(ell.size()));
  std::iota(perm.begin(), perm.end(), 1);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return ell.length(a) < ell.length(b); });
  std::vector<Rational> sorted;
  sorted.reserve(perm.size());
  for (int i : perm) sorted.push_back(ell.length(i));
  return {LengthVector(std::move(sorted)), std::move(perm)};
}

namespace {

std::vector<SubsetMask> ordered_short_sets(const LengthVector& ordered, int k) {
  const int n = ordered.size();
  std::vector<SubsetMask> out;
  const std::uint32_t count = 1U << (n - 1);
  for (std::uint32_t raw = 0; raw < count; ++raw) {
    const SubsetMask j(raw << 1);
    if (j.size() != k) continue;
    if (ordered.balance_sign(j.with(n)) < 0) out.push_back(j);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

SubsetMask pull_back(SubsetMask j, const std::vector<int>& perm) {
  std::uint32_t bits = 0;
  for (int i : j.indices()) bits |= 1U << perm[static_cast<std::size_t>(i - 1)];
  return SubsetMask(bits);
}

}  // namespace

std::vector<SubsetMask> short_sets(const LengthVector& ell, int k) {
  require_generic(ell);
  const int n = ell.size();
  if (k < 0 || k > n - 3) throw OutOfRange("stratum index k=" + std::to_string(k) + " outside 0.." + std::to_string(n - 3));
  if (ell.is_ordered()) return ordered_short_sets(ell, k);
  const auto [ordered, perm] = order_and_track(ell);
  std::vector<SubsetMask> out;
  for (SubsetMask j : ordered_short_sets(ordered, k)) out.push_back(pull_back(j, perm));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool poset_leq(SubsetMask j1, SubsetMask j2) {
  if (j1.size() > j2.size()) return false;
  // Match the t-th largest element of J1 with the t-th largest of J2.
  std::uint32_t a = j1.bits();
  std::uint32_t b = j2.bits();
  while (a != 0) {
    const int top_a = 31 - std::countl_zero(a);
    const int top_b = 31 - std::countl_zero(b);
    if (top_a > top_b) return false;
    a &= ~(1U << top_a);
    b &= ~(1U << top_b);
  }
  return true;
}

std::vector<SubsetMask> poset_elements(int n) {
  std::vector<SubsetMask> out;
  if (n < 3) return out;
  const std::uint32_t count = 1U << (n - 1);
  for (std::uint32_t raw = 0; raw < count; ++raw) {
    const SubsetMask j(raw << 1);
    if (j.size() <= n - 3) out.push_back(j);
  }
  auto index_sum = [](SubsetMask j) {
    int s = 0;
    for (int i : j.indices()) s += i;
    return s;
  };
  std::sort(out.begin(), out.end(), [&](SubsetMask a, SubsetMask b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const int sa = index_sum(a);
    const int sb = index_sum(b);
    if (sa != sb) return sa < sb;
    return canonical_less(a, b);
  });
  return out;
}

// ---------------------------------------------------------- ChamberSignature

bool ChamberSignature::contains(SubsetMask j) const {
  return std::binary_search(shorts.begin(), shorts.end(), j, canonical_less);
}

std::vector<SubsetMask> ChamberSignature::stratum(int k) const {
  std::vector<SubsetMask> out;
  for (SubsetMask j : shorts) {
    if (j.size() == k) out.push_back(j);
  }
  return out;
}

std::vector<int> ChamberSignature::stratum_sizes() const {
  std::vector<int> a(static_cast<std::size_t>(std::max(n - 2, 0)), 0);
  for (SubsetMask j : shorts) ++a[static_cast<std::size_t>(j.size())];
  return a;
}

bool signature_less(const ChamberSignature& a, const ChamberSignature& b) {
  if (a.n != b.n) return a.n < b.n;
  return std::lexicographical_compare(a.shorts.begin(), a.shorts.end(), b.shorts.begin(), b.shorts.end(), canonical_less);
}

ChamberSignature chamber_signature(const LengthVector& ell) {
  require_generic(ell);
  const LengthVector ordered = ell.is_ordered() ? ell : order_and_track(ell).ordered;
  const int n = ordered.size();
  ChamberSignature sig{n, {}};
  const std::uint32_t count = 1U << (n - 1);
  for (std::uint32_t raw = 0; raw < count; ++raw) {
    const SubsetMask j(raw << 1);
    if (j.size() > n - 3) continue;
    if (ordered.balance_sign(j.with(n)) < 0) sig.shorts.push_back(j);
  }
  std::sort(sig.shorts.begin(), sig.shorts.end(), canonical_less);
  return sig;
}

GeneticCode genetic_code(const ChamberSignature& sig) {
  GeneticCode code{sig.n, {}};
  for (SubsetMask a : sig.shorts) {
    const bool dominated = std::any_of(sig.shorts.begin(), sig.shorts.end(),
                                       [&](SubsetMask b) { return b != a && poset_leq(a, b); });
    if (!dominated) code.antichain.push_back(a);
  }
  return code;
}

ChamberSignature down_closure(const GeneticCode& code) {
  ChamberSignature sig{code.n, {}};
  for (SubsetMask j : poset_elements(code.n)) {
    if (std::any_of(code.antichain.begin(), code.antichain.end(), [&](SubsetMask top) { return poset_leq(j, top); })) {
      sig.shorts.push_back(j);
    }
  }
  std::sort(sig.shorts.begin(), sig.shorts.end(), canonical_less);
  return sig;
}

bool is_antichain(std::span<const SubsetMask> masks) {
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = 0; b < masks.size(); ++b) {
      if (a != b && poset_leq(masks[a], masks[b])) return false;
    }
  }
  return true;
}

bool same_chamber(const LengthVector& a, const LengthVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("length vectors of sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  return chamber_signature(a) == chamber_signature(b);
}

}  // namespace polyspace
