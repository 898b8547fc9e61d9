#include "polyspace/presentations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polyspace/errors.hpp"
#include "polyspace/homology.hpp"

namespace polyspace {

std::string GeneratorRole::name() const {
  if (family == 'B' && index == 0) return "B";
  return std::string(1, family) + "_" + std::to_string(index);
}

SubsetMask PresentedCohomology::pinned() const {
  SubsetMask out;
  for (std::size_t j = 0; j < torus_images.size(); ++j) {
    if (torus_images[j]) out = out.with(static_cast<int>(j) + 1);
  }
  return out;
}

namespace {

bool long_with_n(const ChamberSignature& sig, SubsetMask j) { return !sig.contains(j); }

// Inclusion-minimal J in {1,...,n-1} with J u {n} long and keep(J). Every
// family used here is convex between its members, so testing single
// removals is enough.
template <class Pred>
std::vector<SubsetMask> minimal_long(const ChamberSignature& sig, Pred keep) {
  const int n = sig.n;
  std::vector<SubsetMask> out;
  auto in_family = [&](SubsetMask j) { return long_with_n(sig, j) && keep(j); };
  for (std::uint32_t raw = 1; raw < (1U << (n - 1)); ++raw) {
    const SubsetMask j(raw << 1);
    if (!in_family(j)) continue;
    bool minimal = true;
    for (int x : j.indices()) {
      if (in_family(j.without(x))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(j);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Collects generators by role and relations built from role products.
class Builder {
 public:
  int add(char family, int index) {
    roles_.push_back({family, index});
    names_.push_back(roles_.back().name());
    lookup_[{family, index}] = static_cast<int>(roles_.size()) - 1;
    return static_cast<int>(roles_.size()) - 1;
  }
  int gen(char family, int index) const {
    const auto it = lookup_.find({family, index});
    if (it == lookup_.end()) throw std::logic_error("unknown generator");
    return it->second;
  }
  bool has(char family, int index) const { return lookup_.count({family, index}) != 0; }

  RingElement mono(char family, SubsetMask j) const {
    std::vector<int> g;
    for (int x : j.indices()) g.push_back(gen(family, x));
    return RingElement::product_of(g);
  }
  RingElement pair(char f1, int i1, char f2, int i2) const { return RingElement::product_of({gen(f1, i1), gen(f2, i2)}); }
  RingElement single(char family, int index) const { return RingElement::monomial(Monomial{1} << gen(family, index)); }

  void relate(RingElement r) {
    if (!r.is_zero()) relations_.push_back(std::move(r));
  }

  // Generators killed by a degree-1 relation are removed, together with
  // every term that mentions them.
  PresentedCohomology finish(int n, ChamberClass cls, std::vector<std::optional<RingElement>> images) && {
    Monomial dead = 0;
    for (const auto& r : relations_) {
      if (r.degree == 1 && r.terms.size() == 1) dead |= r.terms.front().monomial;
    }
    std::vector<int> remap(roles_.size(), -1);
    PresentedCohomology ph;
    ph.n = n;
    ph.cls = cls;
    ph.deficit_degree = n - 4;
    for (std::size_t g = 0; g < roles_.size(); ++g) {
      if (dead & (Monomial{1} << g)) continue;
      remap[g] = static_cast<int>(ph.roles.size());
      ph.roles.push_back(roles_[g]);
      ph.presentation.generators.push_back(names_[g]);
    }
    auto compress = [&](const RingElement& x) {
      RingElement out{x.degree, {}};
      for (const auto& t : x.terms) {
        if (t.monomial & dead) continue;
        Monomial m = 0;
        for (int g : monomial_indices(t.monomial)) m |= Monomial{1} << remap[static_cast<std::size_t>(g)];
        out.terms.push_back({t.coeff, m});
      }
      // Relabeling keeps the generator order, so terms stay sorted by
      // ascending monomial only after a re-sort.
      std::sort(out.terms.begin(), out.terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
      return out;
    };
    for (const auto& r : relations_) {
      RingElement c = compress(r);
      if (!c.is_zero()) ph.presentation.relations.push_back(std::move(c));
    }
    for (auto& img : images) {
      if (img) img = compress(*img);
    }
    ph.torus_images = std::move(images);
    return ph;
  }

 private:
  std::vector<GeneratorRole> roles_;
  std::vector<std::string> names_;
  std::map<std::pair<char, int>, int> lookup_;
  std::vector<RingElement> relations_;
};

PresentedCohomology present_normal(const ChamberSignature& sig) {
  const int n = sig.n;
  Builder b;
  for (int j = 1; j <= n - 1; ++j) b.add('X', j);
  for (SubsetMask j : minimal_long(sig, [](SubsetMask) { return true; })) b.relate(b.mono('X', j));
  std::vector<std::optional<RingElement>> images;
  for (int j = 1; j <= n - 1; ++j) images.emplace_back(b.single('X', j));
  return std::move(b).finish(n, classify(sig), std::move(images));
}

// Type {1, n-2, n-1}.
PresentedCohomology present_pair_top_first(const ChamberSignature& sig, const ChamberClass& cls) {
  const int n = sig.n;
  Builder b;
  for (int j = 1; j <= n - 1; ++j) b.add('A', j);
  for (int j = 1; j <= n - 3; ++j) b.add('B', j);
  const SubsetMask low = SubsetMask::range(1, n - 3);
  b.relate(b.mono('A', low) + b.mono('B', low) * Integer((n - 3) % 2 == 0 ? 1 : -1));
  for (int i = 1; i <= n - 1; ++i) {
    for (int k = 1; k <= n - 3; ++k) b.relate(b.pair('A', i, 'B', k));
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int k : {n - 2, n - 1}) {
      if (i != k) b.relate(b.pair('A', i, 'A', k));
    }
  }
  for (int k = 1; k <= n - 1; ++k) {
    if (long_with_n(sig, SubsetMask::of({k}))) b.relate(b.single('A', k));
  }
  std::vector<std::optional<RingElement>> images;
  for (int j = 1; j <= n - 1; ++j) images.emplace_back(j <= n - 3 ? b.single('A', j) - b.single('B', j) : b.single('A', j));
  return std::move(b).finish(n, cls, std::move(images));
}

// Type {i, n-2, n-1} with 2 <= i <= n-4.
PresentedCohomology present_pair_top(const ChamberSignature& sig, const ChamberClass& cls, int i) {
  const int n = sig.n;
  Builder b;
  for (int j = 1; j <= n - 1; ++j) b.add('A', j);
  for (int j = i; j <= n - 3; ++j) b.add('B', j);
  const SubsetMask top = SubsetMask::of({n - 2, n - 1});
  const SubsetMask t = SubsetMask::range(i, n - 3);
  const Integer sign = (n - 2 - i) % 2 == 0 ? 1 : -1;
  for (SubsetMask j : minimal_long(sig, [&](SubsetMask x) { return x.intersects(top); })) b.relate(b.mono('A', j));
  const RingElement balanced = b.mono('A', t) + b.mono('B', t) * sign;
  for (SubsetMask j : minimal_long(sig, [&](SubsetMask x) { return !x.intersects(top); })) {
    if (!t.subset_of(j)) throw std::logic_error("long set " + j.to_string() + " misses " + t.to_string());
    b.relate(wedge(b.mono('A', j - t), balanced));
  }
  for (int j = i; j <= n - 1; ++j) {
    for (int k = i; k <= n - 3; ++k) b.relate(b.pair('A', j, 'B', k));
  }
  std::vector<std::optional<RingElement>> images;
  for (int j = 1; j <= n - 1; ++j) {
    images.emplace_back(j >= i && j <= n - 3 ? b.single('A', j) - b.single('B', j) : b.single('A', j));
  }
  return std::move(b).finish(n, cls, std::move(images));
}

// Type {n-4, n-3, n-1}.
PresentedCohomology present_skip_one(const ChamberSignature& sig, const ChamberClass& cls) {
  const int n = sig.n;
  Builder b;
  for (int j = 1; j <= n - 1; ++j) b.add('A', j);
  for (int j = n - 4; j <= n - 2; ++j) b.add('B', j);
  const SubsetMask u = SubsetMask::range(n - 4, n - 2);
  for (SubsetMask j : minimal_long(sig, [&](SubsetMask x) { return !x.intersects(u); })) b.relate(b.mono('A', j));
  for (int p = n - 4; p <= n - 2; ++p) {
    for (int q = n - 4; q <= n - 2; ++q) {
      if (p < q) {
        b.relate(b.pair('A', p, 'A', q));
        b.relate(b.pair('B', p, 'B', q));
      }
      if (p != q) b.relate(b.pair('A', p, 'B', q));
    }
  }
  for (int j = 1; j <= n - 2; ++j) {
    if (long_with_n(sig, SubsetMask::of({j, n - 1}))) b.relate(b.pair('A', n - 1, 'A', j));
  }
  for (int j = n - 4; j <= n - 2; ++j) b.relate(b.pair('A', n - 1, 'B', j));
  b.relate(b.pair('A', n - 2, 'B', n - 2) - b.pair('A', n - 3, 'B', n - 3));
  b.relate(b.pair('A', n - 3, 'B', n - 3) - b.pair('A', n - 4, 'B', n - 4));
  std::vector<std::optional<RingElement>> images(static_cast<std::size_t>(n - 1));
  for (int j = 1; j <= n - 5; ++j) images[static_cast<std::size_t>(j - 1)] = b.single('A', j);
  images[static_cast<std::size_t>(n - 2)] = b.single('A', n - 1);
  return std::move(b).finish(n, cls, std::move(images));
}

// Type {n-3, n-2, n-1}: a face ring on the A_j and B.
PresentedCohomology present_top_triple(const ChamberSignature& sig, const ChamberClass& cls) {
  const int n = sig.n;
  Builder b;
  for (int j = 1; j <= n - 1; ++j) b.add('A', j);
  b.add('B', 0);
  for (SubsetMask j : minimal_long(sig, [](SubsetMask) { return true; })) b.relate(b.mono('A', j));
  for (int j = std::max(n - 3, 1); j <= n - 1; ++j) b.relate(b.pair('A', j, 'B', 0));
  std::vector<std::optional<RingElement>> images;
  for (int j = 1; j <= n - 1; ++j) images.emplace_back(b.single('A', j));
  return std::move(b).finish(n, cls, std::move(images));
}

// Type {n-4, n-3, n-2}: torus on A_1..A_{n-5} times the genus-4 surface on
// A_{n-4..n-1}, B_{n-4..n-1}.
PresentedCohomology present_low_triple(const ChamberSignature& sig, const ChamberClass& cls) {
  const int n = sig.n;
  Builder b;
  for (int j = 1; j <= n - 1; ++j) b.add('A', j);
  for (int j = n - 4; j <= n - 1; ++j) b.add('B', j);
  for (int p = n - 4; p <= n - 1; ++p) {
    for (int q = p + 1; q <= n - 1; ++q) {
      b.relate(b.pair('A', p, 'A', q));
      b.relate(b.pair('B', p, 'B', q));
      b.relate(b.pair('A', p, 'B', q));
      b.relate(b.pair('A', q, 'B', p));
    }
    if (p < n - 1) b.relate(b.pair('A', p, 'B', p) - b.pair('A', p + 1, 'B', p + 1));
  }
  std::vector<std::optional<RingElement>> images(static_cast<std::size_t>(n - 1));
  for (int j = 1; j <= n - 5; ++j) images[static_cast<std::size_t>(j - 1)] = b.single('A', j);
  return std::move(b).finish(n, cls, std::move(images));
}

}  // namespace

SimplicialComplex balanced_complex(const ChamberSignature& sig) {
  const int n = sig.n;
  SimplicialComplex c;
  std::vector<int> vertex_of(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n - 1; ++j) {
    if (sig.contains(SubsetMask::of({j}))) {
      vertex_of[static_cast<std::size_t>(j)] = c.vertex_count();
      c.vertices.push_back("X_" + std::to_string(j));
    }
  }
  for (SubsetMask j : sig.shorts) {
    if (j.empty()) continue;
    const bool maximal = std::none_of(sig.shorts.begin(), sig.shorts.end(), [&](SubsetMask k) { return k != j && j.subset_of(k); });
    if (!maximal) continue;
    Monomial face = 0;
    for (int x : j.indices()) face |= Monomial{1} << vertex_of[static_cast<std::size_t>(x)];
    c.facets.push_back(face);
  }
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

PresentedCohomology present_h1(const ChamberSignature& sig) {
  const ChamberClass cls = classify(sig);
  if (cls.kind == ChamberClass::Kind::Empty) throw Unsupported("the polygon space is empty");
  if (cls.kind == ChamberClass::Kind::Disconnected) throw Unsupported("no ring presentation for the disconnected chamber");
  if (cls.kind == ChamberClass::Kind::Normal) return present_normal(sig);
  const auto info = type_family(cls.type, sig.n);
  if (!info) throw WrongType("type " + cls.type.to_string() + " is not one of the possible special types");
  switch (info->family) {
    case TypeFamily::PairTop:
      return info->i == 1 ? present_pair_top_first(sig, cls) : present_pair_top(sig, cls, info->i);
    case TypeFamily::SkipOne: return present_skip_one(sig, cls);
    case TypeFamily::TopTriple: return present_top_triple(sig, cls);
    case TypeFamily::LowTriple: return present_low_triple(sig, cls);
  }
  throw std::logic_error("unhandled type family");
}

PresentedCohomology present_h1(const LengthVector& ell) { return present_h1(chamber_signature(ell)); }

namespace {

// X_J for J inside the pinned set, as a product of torus images.
RingElement torus_product(const PresentedCohomology& ph, SubsetMask j) {
  RingElement x = RingElement::monomial(0);
  for (int idx : j.indices()) x = wedge(x, *ph.torus_images[static_cast<std::size_t>(idx - 1)]);
  return x;
}

}  // namespace

std::vector<int> torus_image_ranks(const PresentedCohomology& ph) {
  QuotientRing ring(ph.presentation);
  const SubsetMask pinned = ph.pinned();
  std::vector<std::vector<RingElement>> by_degree(static_cast<std::size_t>(ph.n - 2));
  for (std::uint32_t raw = 0; raw < (1U << (ph.n - 1)); ++raw) {
    const SubsetMask j(raw << 1);
    if (!j.subset_of(pinned) || j.size() > ph.n - 3) continue;
    by_degree[static_cast<std::size_t>(j.size())].push_back(torus_product(ph, j));
  }
  std::vector<int> ranks;
  for (const auto& elems : by_degree) ranks.push_back(ring.span_rank(elems));
  return ranks;
}

std::vector<int> restricted_a_vector(const ChamberSignature& sig, SubsetMask indices) {
  std::vector<int> a(static_cast<std::size_t>(std::max(sig.n - 2, 0)), 0);
  for (SubsetMask j : sig.shorts) {
    if (j.subset_of(indices)) ++a[static_cast<std::size_t>(j.size())];
  }
  return a;
}

std::vector<SubsetMask> balanced_embedding_violations(const PresentedCohomology& ph, const ChamberSignature& sig) {
  QuotientRing ring(ph.presentation);
  const SubsetMask pinned = ph.pinned();
  std::vector<SubsetMask> bad;
  for (std::uint32_t raw = 0; raw < (1U << (ph.n - 1)); ++raw) {
    const SubsetMask j(raw << 1);
    if (!j.subset_of(pinned)) continue;
    const bool vanishes = ring.is_zero(torus_product(ph, j));
    if (vanishes != long_with_n(sig, j)) bad.push_back(j);
  }
  std::sort(bad.begin(), bad.end(), canonical_less);
  return bad;
}

RingPresentation balanced_subalgebra(const ChamberSignature& sig) {
  if (!classify(sig).is_connected()) throw Unsupported("the balanced subalgebra is built for connected chambers");
  return face_ring(balanced_complex(sig));
}

RingPresentation balanced_subalgebra(const LengthVector& ell) { return balanced_subalgebra(chamber_signature(ell)); }

int h1_deficit(const ChamberSignature& sig) {
  if (!classify(sig).is_special()) throw NotSpecial("the degree n-4 deficit is defined for special chambers");
  const int k = sig.n - 4;
  return betti(sig)[static_cast<std::size_t>(k)] - graded_rank(present_h1(sig).presentation, k);
}

int h1_deficit(const LengthVector& ell) { return h1_deficit(chamber_signature(ell)); }

int expected_deficit(const ChamberSignature& sig) {
  const ChamberClass cls = classify(sig);
  if (!cls.is_special()) throw NotSpecial("the degree n-4 deficit is defined for special chambers");
  const int n = sig.n;
  auto short_pair = [&](int k) { return sig.contains(SubsetMask::of({k})) ? 1 : 0; };
  const auto info = type_family(cls.type, n);
  if (!info) throw WrongType("type " + cls.type.to_string() + " is not one of the possible special types");
  switch (info->family) {
    case TypeFamily::PairTop: return short_pair(n - 2) + short_pair(n - 1);
    case TypeFamily::SkipOne: return short_pair(n - 1);
    case TypeFamily::TopTriple: {
      int d = 0;
      for (int k = std::max(n - 3, 1); k <= n - 1; ++k) d += short_pair(k);
      return d;
    }
    case TypeFamily::LowTriple: return 0;
  }
  return 0;
}

RaagGraph raag_graph(const ChamberSignature& sig) {
  const int n = sig.n;
  const ChamberClass cls = classify(sig);
  const auto info = cls.is_special() ? type_family(cls.type, n) : std::nullopt;
  if (!info || info->family != TypeFamily::PairTop) throw WrongType("the commutation graph needs a special chamber of type {i,n-2,n-1}");
  const int i = info->i;
  const bool applicable = (i <= n - 5 && n >= 6) || (i == n - 4 && n >= 7 && sig.contains(SubsetMask::of({n - 4, n - 3})));
  if (!applicable) throw WrongType("type " + cls.type.to_string() + " has no right-angled Artin fundamental group");

  RaagGraph g;
  std::map<std::pair<char, int>, int> id;
  const int k = static_cast<int>(sig.stratum(1).size());
  for (int j = 1; j <= k; ++j) {
    id[{'a', j}] = static_cast<int>(g.vertices.size());
    g.vertices.push_back("a_" + std::to_string(j));
  }
  for (int j = i; j <= n - 3; ++j) {
    id[{'b', j}] = static_cast<int>(g.vertices.size());
    g.vertices.push_back("b_" + std::to_string(j));
  }
  auto edge = [&](char f1, int j1, char f2, int j2) { g.edges.emplace_back(id.at({f1, j1}), id.at({f2, j2})); };
  for (int j = 1; j <= n - 3; ++j) {
    for (int m = j + 1; m <= n - 3; ++m) edge('a', j, 'a', m);
  }
  for (int j = 1; j <= i - 1; ++j) {
    for (int m = i; m <= n - 3; ++m) edge('a', j, 'b', m);
  }
  // The b-vertices are pairwise adjacent up to and including index n-3.
  for (int j = i; j <= n - 3; ++j) {
    for (int m = j + 1; m <= n - 3; ++m) edge('b', j, 'b', m);
  }
  for (int j = 1; j <= i - 1; ++j) {
    for (int m = n - 2; m <= k; ++m) {
      if (sig.contains(SubsetMask::of({j, m}))) edge('a', j, 'a', m);
    }
  }
  g.flag = flag_complex(g.vertices, g.edges);
  return g;
}

RaagGraph raag_graph(const LengthVector& ell) { return raag_graph(chamber_signature(ell)); }

RaagReport raag_consistency(const ChamberSignature& sig) {
  const RaagGraph g = raag_graph(sig);
  const PresentedCohomology ph = present_h1(sig);
  QuotientRing ring(ph.presentation);

  // a_j -> A_j, b_j -> B_j.
  std::vector<int> to_generator;
  for (const auto& v : g.vertices) {
    const std::string name = std::string(1, static_cast<char>(v[0] - 'a' + 'A')) + v.substr(1);
    to_generator.push_back(ph.presentation.index_of(name));
  }
  RaagReport report;
  std::vector<std::vector<bool>> adjacent(g.vertices.size(), std::vector<bool>(g.vertices.size(), false));
  for (const auto& [u, v] : g.edges) adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      if (adjacent[u][v]) continue;
      const int gu = to_generator[u];
      const int gv = to_generator[v];
      if (gu < 0 || gv < 0) continue;
      if (!ring.is_zero(RingElement::product_of({gu, gv}))) report.nonvanishing_non_edges.emplace_back(g.vertices[u], g.vertices[v]);
    }
  }
  const int top = std::max(ph.presentation.generator_count(), static_cast<int>(g.vertices.size()));
  report.flag_ranks = graded_ranks(face_ring(g.flag), top);
  report.ring_ranks = ring.ranks(top);
  report.ranks_dominate = true;
  for (std::size_t k = 0; k < report.ring_ranks.size(); ++k) {
    if (report.flag_ranks[k] < report.ring_ranks[k]) report.ranks_dominate = false;
  }
  return report;
}

RaagReport raag_consistency(const LengthVector& ell) { return raag_consistency(chamber_signature(ell)); }

}  // namespace polyspace
