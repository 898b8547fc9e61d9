#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyspace/combinatorics.hpp"
#include "polyspace/exterior_algebra.hpp"
#include "polyspace/taxonomy.hpp"

namespace polyspace {

/// Role of a generator: A_j, B_j, the lone B, or a torus class X_j.
struct GeneratorRole {
  char family = 'A';  // 'A', 'B' or 'X'
  int index = 0;      // 0 for the lone B

  std::string name() const;
  bool operator==(const GeneratorRole&) const = default;
};

/// The subring generated by H^1 of a connected polygon space, together with
/// the images of the torus classes X_1,...,X_{n-1}.
struct PresentedCohomology {
  int n = 0;
  ChamberClass cls;
  RingPresentation presentation;
  std::vector<GeneratorRole> roles;  // parallel to presentation.generators
  /// Entry j-1 is the image of X_j (possibly zero); std::nullopt where the
  /// image is not determined by the construction.
  std::vector<std::optional<RingElement>> torus_images;
  int deficit_degree = 0;  // n-4

  /// X_j with a determined image.
  SubsetMask pinned() const;
};

/// The complex of nonempty members of the chamber signature on the vertices
/// X_j with {j,n} short.
SimplicialComplex balanced_complex(const ChamberSignature& sig);

/// Throws Unsupported for the empty and disconnected chambers.
PresentedCohomology present_h1(const ChamberSignature& sig);
PresentedCohomology present_h1(const LengthVector& ell);

/// Rank in degrees 0..n-3 of the subring generated by the determined torus
/// images.
std::vector<int> torus_image_ranks(const PresentedCohomology& ph);

/// Number of members of the signature inside the given index set, by
/// cardinality 0..n-3 (the full a-vector for the whole ground set).
std::vector<int> restricted_a_vector(const ChamberSignature& sig, SubsetMask indices);

/// For every J inside the pinned set: X_J vanishes in the ring exactly when
/// J u {n} is long. Returns the offending sets.
std::vector<SubsetMask> balanced_embedding_violations(const PresentedCohomology& ph, const ChamberSignature& sig);

/// Exterior face ring of the balanced complex.
RingPresentation balanced_subalgebra(const ChamberSignature& sig);
RingPresentation balanced_subalgebra(const LengthVector& ell);

/// b_{n-4} minus the rank of the presented ring in degree n-4. Throws
/// NotSpecial.
int h1_deficit(const ChamberSignature& sig);
int h1_deficit(const LengthVector& ell);

/// Degree-1 generators whose dual class in degree n-4 is missing from the
/// subring: the top A_k with {k,n} short for the types {i,n-2,n-1} and
/// {n-3,n-2,n-1}, A_{n-1} for {n-4,n-3,n-1}, none for {n-4,n-3,n-2}.
int expected_deficit(const ChamberSignature& sig);

struct RaagGraph {
  std::vector<std::string> vertices;  // "a_j", "b_j"
  std::vector<std::pair<int, int>> edges;
  SimplicialComplex flag;
};

/// Commutation graph of the right-angled Artin group for type {i,n-2,n-1}
/// with i <= n-5, or i = n-4 with {n-4,n-3,n} short. Throws WrongType
/// otherwise.
RaagGraph raag_graph(const ChamberSignature& sig);
RaagGraph raag_graph(const LengthVector& ell);

struct RaagReport {
  std::vector<std::pair<std::string, std::string>> nonvanishing_non_edges;
  std::vector<int> flag_ranks;
  std::vector<int> ring_ranks;
  bool ranks_dominate = false;
  bool pass() const { return nonvanishing_non_edges.empty() && ranks_dominate; }
};

/// Non-edges multiply to zero in the presented ring, and the flag face ring
/// is at least as large in every degree.
RaagReport raag_consistency(const ChamberSignature& sig);
RaagReport raag_consistency(const LengthVector& ell);

}  // namespace polyspace
