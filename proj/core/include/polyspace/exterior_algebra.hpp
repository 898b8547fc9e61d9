#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

/// Square-free monomial in the degree-1 generators: bit g is generator g
/// (0-based). The sign convention is the ascending product g_1 < g_2 < ...
using Monomial = std::uint32_t;

/// Largest generator count the engine accepts.
inline constexpr int kMaxGenerators = 30;

inline int monomial_degree(Monomial m) { return __builtin_popcount(m); }

/// Ascending generator list of a monomial.
std::vector<int> monomial_indices(Monomial m);

/// Sign of a*b relative to the ascending monomial a|b; 0 when they share a
/// generator.
int koszul_sign(Monomial a, Monomial b);

/// Lexicographic order on ascending generator lists (equal degrees).
bool monomial_lex_less(Monomial a, Monomial b);

struct Term {
  Integer coeff;
  Monomial monomial = 0;
  bool operator==(const Term&) const = default;
};

/// Homogeneous integer combination of monomials; terms sorted by monomial,
/// no zero coefficients. The zero element has no terms.
struct RingElement {
  int degree = 0;
  std::vector<Term> terms;

  static RingElement zero(int degree) { return {degree, {}}; }
  static RingElement monomial(Monomial m, Integer coeff = 1);
  /// The product g_{i_1} g_{i_2} ... in the given order, sign-normalized.
  static RingElement product_of(const std::vector<int>& generators);
  /// Sum of coeff_j * g_j.
  static RingElement linear(const std::vector<std::pair<int, Integer>>& coeffs);

  bool is_zero() const { return terms.empty(); }
  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator*(const Integer& c) const;
  bool operator==(const RingElement&) const = default;
};

/// Product in the free exterior algebra (no reduction).
RingElement wedge(const RingElement& x, const RingElement& y);

/// Exterior algebra on named degree-1 generators modulo the ideal generated
/// by the relations (each homogeneous of degree >= 1).
struct RingPresentation {
  std::vector<std::string> generators;
  std::vector<RingElement> relations;

  int generator_count() const { return static_cast<int>(generators.size()); }
  /// Position of a generator name, -1 if absent.
  int index_of(const std::string& name) const;
  /// "A_1*B_2 - 2*A_3*B_1" style rendering.
  std::string format(const RingElement& x) const;
};

/// Finite simplicial complex on named vertices. Faces are the subsets of the
/// facets; an isolated vertex is listed as a singleton facet.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<Monomial> facets;  // bit v is vertex v

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool contains(Monomial face) const;
  /// Every face including the empty one, ascending.
  std::vector<Monomial> faces() const;
  /// f[k] = number of faces with k vertices.
  std::vector<int> face_counts() const;
  /// Inclusion-minimal vertex sets that are not faces.
  std::vector<Monomial> minimal_non_faces() const;
};

/// Exterior face ring: the vertices modulo the monomials of minimal non-faces.
RingPresentation face_ring(const SimplicialComplex& complex);

/// Computes and caches the graded pieces of a presentation. Not thread-safe;
/// create one per thread.
class QuotientRing {
 public:
  explicit QuotientRing(RingPresentation presentation);
  ~QuotientRing();
  QuotientRing(QuotientRing&&) noexcept;
  QuotientRing& operator=(QuotientRing&&) noexcept;

  const RingPresentation& presentation() const { return presentation_; }

  /// Rank over the rationals of the degree-k part.
  int rank(int k);
  /// rank(0..max_degree).
  std::vector<int> ranks(int max_degree);
  /// Canonical representative: the residue after elimination against the
  /// ideal slice with pivots at the lexicographically least monomials.
  RingElement normal_form(const RingElement& x);
  RingElement multiply(const RingElement& x, const RingElement& y);
  bool is_zero(const RingElement& x) { return normal_form(x).is_zero(); }
  /// Monomials forming a basis of the degree-k part.
  std::vector<Monomial> basis(int k);
  /// Rank of the span of the given homogeneous elements (all of degree k).
  int span_rank(const std::vector<RingElement>& elements);
  /// Rank of {x of degree deg : x * m = 0 for every monomial m of degree power}.
  int annihilator_rank(int deg, int power);

 private:
  struct Slice;
  Slice& slice(int k);

  RingPresentation presentation_;
  std::map<int, std::unique_ptr<Slice>> slices_;
};

/// One-shot wrappers around QuotientRing.
int graded_rank(const RingPresentation& p, int k);
std::vector<int> graded_ranks(const RingPresentation& p, int max_degree);
RingElement multiply(const RingPresentation& p, const RingElement& x, const RingElement& y);
int annihilator_rank_ring(const RingPresentation& p, int deg, int power);

/// Vertex bijection phi (vertex v of a goes to phi[v] of b) carrying faces to
/// faces in both directions, or std::nullopt.
std::optional<std::vector<int>> complex_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Largest complex with the given 1-skeleton: facets are the maximal cliques.
SimplicialComplex flag_complex(const std::vector<std::string>& vertices, const std::vector<std::pair<int, int>>& edges);

}  // namespace polyspace
