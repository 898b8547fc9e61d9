#pragma once

#include <optional>
#include <vector>

#include "polyspace/combinatorics.hpp"
#include "polyspace/homology.hpp"
#include "polyspace/taxonomy.hpp"

namespace polyspace {

/// Membership constraints for an ordered representative: every mask in
/// must_be_short has J u {n} short, every mask in must_be_long has J u {n}
/// long, and l_1 <= ... <= l_n.
struct RealizabilityProblem {
  int n = 0;
  std::vector<SubsetMask> must_be_short;
  std::vector<SubsetMask> must_be_long;
};

/// Maximizes the common slack delta over the constraint cone cut by
/// sum(l) <= 1. Returns an ordered generic witness when the optimum delta is
/// positive, std::nullopt otherwise.
std::optional<LengthVector> solve_realizability(const RealizabilityProblem& problem);

/// Throws InvalidAntichain when the members are comparable, have more than
/// n-3 elements or use indices outside {1,...,n-1}.
std::optional<LengthVector> realizable(int n, const GeneticCode& code);

/// Primitive integer witness of the chamber; throws Unrealizable.
LengthVector representative(const ChamberSignature& sig);

struct CatalogEntry {
  GeneticCode code;
  ChamberSignature signature;
  LengthVector representative;
  BettiVector betti;
  ChamberClass cls;
};

/// Builds an entry from a signature (representative, Betti numbers, class).
CatalogEntry make_catalog_entry(const ChamberSignature& sig);

struct ChamberCatalog {
  int n = 0;
  std::vector<CatalogEntry> entries;  // sorted by signature_less
};

/// Largest n accepted by enumerate_chambers.
inline constexpr int kMaxEnumerationBars = 9;

/// Every chamber of generic length vectors with n bars up to permutation.
/// jobs <= 0 uses the available hardware threads. Throws OutOfRange unless
/// 3 <= n <= kMaxEnumerationBars.
ChamberCatalog enumerate_chambers(int n, int jobs = 1);

}  // namespace polyspace
