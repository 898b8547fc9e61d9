#include "polyspace/walker.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "polyspace/errors.hpp"
#include "polyspace/homology.hpp"
#include "polyspace/presentations.hpp"

namespace polyspace {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string Fingerprint::serialize() const {
  std::ostringstream os;
  os << "n=" << n << ";betti=" << join(betti) << ";h1=" << join(h1_ranks) << ";ann=";
  bool first = true;
  for (const auto& [key, rank] : ann_table) {
    os << (first ? "" : ",") << "(" << key.first << "," << key.second << "):" << rank;
    first = false;
  }
  os << ";class=" << class_tag.to_string();
  return os.str();
}

Fingerprint fingerprint(const ChamberSignature& sig) {
  Fingerprint f;
  f.n = sig.n;
  f.betti = betti(sig);
  f.class_tag = classify(sig);
  if (f.class_tag.is_connected()) {
    QuotientRing ring(present_h1(sig).presentation);
    f.h1_ranks = ring.ranks(sig.n - 3);
    for (int k = 1; k <= sig.n - 4; ++k) {
      for (int i = 1; k + i <= sig.n - 3; ++i) f.ann_table[{k, i}] = annihilator_rank_combinatorial(sig, k, i);
    }
  }
  return f;
}

Fingerprint fingerprint(const LengthVector& ell) { return fingerprint(chamber_signature(ell)); }

std::optional<SimplicialComplex> face_ring_complex(const RingPresentation& p) {
  std::vector<Monomial> non_faces;
  for (const auto& r : p.relations) {
    if (r.terms.size() != 1) return std::nullopt;
    non_faces.push_back(r.terms.front().monomial);
  }
  const int k = p.generator_count();
  std::vector<Monomial> faces;
  for (Monomial m = 0; m < (Monomial{1} << k); ++m) {
    if (std::none_of(non_faces.begin(), non_faces.end(), [&](Monomial bad) { return (m & bad) == bad; })) faces.push_back(m);
  }
  SimplicialComplex c;
  c.vertices = p.generators;
  for (Monomial f : faces) {
    if (f == 0) continue;
    const bool maximal = std::none_of(faces.begin(), faces.end(), [&](Monomial g) { return g != f && (g & f) == f; });
    if (maximal) c.facets.push_back(f);
  }
  return c;
}

std::size_t WalkerReport::unexplained() const {
  const auto it = tier_counts.find(0);
  return it == tier_counts.end() ? 0 : it->second;
}

bool WalkerReport::pass() const {
  if (unexplained() != 0 || !face_counts_consistent) return false;
  const auto tier1 = tier_counts.find(1);
  const std::size_t at_tier1 = tier1 == tier_counts.end() ? 0 : tier1->second;
  if (n <= 5 && at_tier1 != pairs.size()) return false;
  if (n == 6 && at_tier1 == pairs.size()) return false;
  return true;
}

namespace {

std::string rigidity_tag(const ChamberClass& cls, int n) {
  if (!cls.is_special()) return {};
  const auto info = type_family(cls.type, n);
  if (!info) return {};
  switch (info->family) {
    case TypeFamily::PairTop: return "rigidity of type {i,n-2,n-1}";
    case TypeFamily::SkipOne: return "rigidity of type {n-4,n-3,n-1}";
    case TypeFamily::TopTriple: return "rigidity of type {n-3,n-2,n-1}";
    case TypeFamily::LowTriple: return "uniqueness of type {n-4,n-3,n-2}";
  }
  return {};
}

std::string first_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.h1_ranks != b.h1_ranks) return "h1_ranks";
  if (a.ann_table != b.ann_table) return "ann_table";
  return "class_tag";
}

}  // namespace

WalkerReport verify_walker(const ChamberCatalog& catalog) {
  WalkerReport report;
  report.n = catalog.n;
  report.chambers = catalog.entries.size();
  const int n = catalog.n;

  std::vector<Fingerprint> prints;
  std::vector<std::optional<SimplicialComplex>> complexes;
  for (const auto& e : catalog.entries) {
    prints.push_back(fingerprint(e.signature));
    complexes.push_back(e.cls.is_connected() ? face_ring_complex(present_h1(e.signature).presentation) : std::nullopt);
  }

  for (std::size_t a = 0; a < prints.size(); ++a) {
    for (std::size_t b = a + 1; b < prints.size(); ++b) {
      PairVerdict v{a, b, 0, {}};
      if (prints[a].betti != prints[b].betti) {
        v.tier = 1;
        v.witness = "betti";
      } else if (!(prints[a] == prints[b])) {
        v.tier = 2;
        v.witness = first_difference(prints[a], prints[b]);
      } else {
        bool separated = false;
        if (complexes[a] && complexes[b]) {
          if (complex_isomorphic(*complexes[a], *complexes[b])) {
            if (complexes[a]->face_counts() != complexes[b]->face_counts()) report.face_counts_consistent = false;
          } else {
            v.tier = 3;
            v.witness = "face-ring complex";
            separated = true;
          }
        }
        if (!separated) {
          const std::string tag = rigidity_tag(catalog.entries[a].cls, n);
          if (!tag.empty() && catalog.entries[a].cls == catalog.entries[b].cls) {
            v.tier = 4;
            v.witness = tag;
          } else {
            v.witness = "unexplained";
          }
        }
      }
      ++report.tier_counts[v.tier];
      report.pairs.push_back(std::move(v));
    }
  }
  return report;
}

WalkerReport verify_walker(int n, int jobs) {
  if (n < 3 || n > 7) throw OutOfRange("walker verification supports 3 <= n <= 7, got " + std::to_string(n));
  return verify_walker(enumerate_chambers(n, jobs));
}

namespace {

RingElement transport(const RingElement& x, const SignedBijection& map) {
  RingElement out = RingElement::zero(x.degree);
  for (const Term& t : x.terms) {
    std::vector<int> gens;
    int sign = 1;
    for (int g : monomial_indices(t.monomial)) {
      gens.push_back(map.target[static_cast<std::size_t>(g)]);
      sign *= map.sign[static_cast<std::size_t>(g)];
    }
    out = out + RingElement::product_of(gens) * Integer(t.coeff * sign);
  }
  return out;
}

// (rank of g * H^1, number of generators h with g h = 0) per generator.
std::vector<std::pair<int, int>> profiles(QuotientRing& ring) {
  const int k = ring.presentation().generator_count();
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g < k; ++g) {
    std::vector<RingElement> products;
    int zero = 0;
    for (int h = 0; h < k; ++h) {
      RingElement p = ring.normal_form(RingElement::product_of({g, h}));
      if (p.is_zero()) ++zero;
      products.push_back(std::move(p));
    }
    out.emplace_back(ring.span_rank(products), zero);
  }
  return out;
}

SignedBijection inverse(const SignedBijection& m) {
  SignedBijection inv{std::vector<int>(m.target.size()), std::vector<int>(m.sign.size())};
  for (std::size_t g = 0; g < m.target.size(); ++g) {
    inv.target[static_cast<std::size_t>(m.target[g])] = static_cast<int>(g);
    inv.sign[static_cast<std::size_t>(m.target[g])] = m.sign[g];
  }
  return inv;
}

}  // namespace

std::optional<SignedBijection> presentation_equivalent_monomial(const RingPresentation& p1, const RingPresentation& p2) {
  const int k = p1.generator_count();
  if (k != p2.generator_count()) return std::nullopt;
  QuotientRing q1(p1);
  QuotientRing q2(p2);
  if (q1.ranks(k) != q2.ranks(k)) return std::nullopt;
  const auto prof1 = profiles(q1);
  const auto prof2 = profiles(q2);

  // Relations checkable once their largest generator has been assigned.
  std::vector<std::vector<const RingElement*>> ready(static_cast<std::size_t>(k));
  for (const auto& r : p1.relations) {
    Monomial support = 0;
    for (const Term& t : r.terms) support |= t.monomial;
    if (support == 0) continue;
    ready[static_cast<std::size_t>(31 - __builtin_clz(support))].push_back(&r);
  }

  SignedBijection map{std::vector<int>(static_cast<std::size_t>(k), -1), std::vector<int>(static_cast<std::size_t>(k), 1)};
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  std::function<bool(int)> assign = [&](int g) -> bool {
    if (g == k) {
      const SignedBijection back = inverse(map);
      return std::all_of(p2.relations.begin(), p2.relations.end(), [&](const RingElement& r) { return q1.is_zero(transport(r, back)); });
    }
    for (int h = 0; h < k; ++h) {
      if (used[static_cast<std::size_t>(h)] || prof1[static_cast<std::size_t>(g)] != prof2[static_cast<std::size_t>(h)]) continue;
      for (int sign : {1, -1}) {
        map.target[static_cast<std::size_t>(g)] = h;
        map.sign[static_cast<std::size_t>(g)] = sign;
        const auto& checks = ready[static_cast<std::size_t>(g)];
        const bool ok = std::all_of(checks.begin(), checks.end(), [&](const RingElement* r) { return q2.is_zero(transport(*r, map)); });
        if (!ok) continue;
        used[static_cast<std::size_t>(h)] = true;
        if (assign(g + 1)) return true;
        used[static_cast<std::size_t>(h)] = false;
      }
    }
    map.target[static_cast<std::size_t>(g)] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

}  // namespace polyspace
