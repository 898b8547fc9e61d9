#include "polyspace/exterior_algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "polyspace/errors.hpp"

namespace polyspace {

// ------------------------------------------------------------------ monomials

std::vector<int> monomial_indices(Monomial m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int koszul_sign(Monomial a, Monomial b) {
  if ((a & b) != 0) return 0;
  // Each generator of b passes every generator of a that is larger.
  int swaps = 0;
  for (Monomial rest = b; rest != 0; rest &= rest - 1) {
    const int g = std::countr_zero(rest);
    swaps += std::popcount(a >> (g + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

bool monomial_lex_less(Monomial a, Monomial b) {
  const Monomial diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

namespace {

// All m-subsets of {0,...,g-1} as bitmasks, in increasing numeric order.
std::vector<Monomial> monomials_of_degree(int g, int m) {
  std::vector<Monomial> out;
  if (m < 0 || m > g) return out;
  if (m == 0) return {0};
  const std::uint64_t limit = std::uint64_t{1} << g;
  std::uint64_t v = (std::uint64_t{1} << m) - 1;
  while (v < limit) {
    out.push_back(static_cast<Monomial>(v));
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms = std::move(merged);
}

}  // namespace

// ---------------------------------------------------------------- RingElement

RingElement RingElement::monomial(Monomial m, Integer coeff) {
  RingElement x{monomial_degree(m), {}};
  if (sgn(coeff) != 0) x.terms.push_back({std::move(coeff), m});
  return x;
}

RingElement RingElement::product_of(const std::vector<int>& generators) {
  RingElement x = monomial(0);
  for (int g : generators) x = wedge(x, monomial(Monomial{1} << g));
  return x;
}

RingElement RingElement::linear(const std::vector<std::pair<int, Integer>>& coeffs) {
  RingElement x{1, {}};
  for (const auto& [g, c] : coeffs) x.terms.push_back({c, Monomial{1} << g});
  normalize_terms(x.terms);
  return x;
}

RingElement RingElement::operator+(const RingElement& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (degree != other.degree) throw std::invalid_argument("adding ring elements of different degrees");
  RingElement out{degree, terms};
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  normalize_terms(out.terms);
  return out;
}

RingElement RingElement::operator-(const RingElement& other) const { return *this + other * Integer(-1); }

RingElement RingElement::operator*(const Integer& c) const {
  RingElement out{degree, terms};
  for (auto& t : out.terms) t.coeff *= c;
  normalize_terms(out.terms);
  return out;
}

RingElement wedge(const RingElement& x, const RingElement& y) {
  RingElement out{x.degree + y.degree, {}};
  for (const auto& a : x.terms) {
    for (const auto& b : y.terms) {
      const int s = koszul_sign(a.monomial, b.monomial);
      if (s == 0) continue;
      out.terms.push_back({a.coeff * b.coeff * s, a.monomial | b.monomial});
    }
  }
  normalize_terms(out.terms);
  return out;
}

// ----------------------------------------------------------- RingPresentation

int RingPresentation::index_of(const std::string& name) const {
  const auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

std::string RingPresentation::format(const RingElement& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : x.terms) {
    Integer c = t.coeff;
    if (!first) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    c = abs(c);
    std::string mono;
    for (int g : monomial_indices(t.monomial)) {
      if (!mono.empty()) mono += '*';
      mono += generators[static_cast<std::size_t>(g)];
    }
    if (mono.empty()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += mono;
    }
    first = false;
  }
  return s;
}

// ---------------------------------------------------------- SimplicialComplex

bool SimplicialComplex::contains(Monomial face) const {
  if (face == 0) return true;
  return std::any_of(facets.begin(), facets.end(), [&](Monomial f) { return (face & ~f) == 0; });
}

std::vector<Monomial> SimplicialComplex::faces() const {
  std::unordered_set<Monomial> seen{0};
  for (Monomial f : facets) {
    for (Monomial sub = f; sub != 0; sub = (sub - 1) & f) seen.insert(sub);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SimplicialComplex::face_counts() const {
  std::vector<int> f;
  for (Monomial face : faces()) {
    const auto k = static_cast<std::size_t>(monomial_degree(face));
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

std::vector<Monomial> SimplicialComplex::minimal_non_faces() const {
  // A minimal non-face minus any vertex is a face, so faces plus one vertex
  // cover every candidate.
  const std::vector<Monomial> all = faces();
  const std::unordered_set<Monomial> face_set(all.begin(), all.end());
  std::unordered_set<Monomial> found;
  for (Monomial f : all) {
    for (int v = 0; v < vertex_count(); ++v) {
      const Monomial bit = Monomial{1} << v;
      if (f & bit) continue;
      const Monomial sigma = f | bit;
      if (face_set.count(sigma) || found.count(sigma)) continue;
      bool minimal = true;
      for (Monomial rest = sigma; rest != 0 && minimal; rest &= rest - 1) {
        minimal = face_set.count(sigma & ~(rest & (~rest + 1))) != 0;
      }
      if (minimal) found.insert(sigma);
    }
  }
  std::vector<Monomial> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](Monomial a, Monomial b) {
    if (monomial_degree(a) != monomial_degree(b)) return monomial_degree(a) < monomial_degree(b);
    return monomial_lex_less(a, b);
  });
  return out;
}

RingPresentation face_ring(const SimplicialComplex& complex) {
  RingPresentation p{complex.vertices, {}};
  for (Monomial sigma : complex.minimal_non_faces()) p.relations.push_back(RingElement::monomial(sigma));
  return p;
}

// ----------------------------------------------------------- linear algebra

namespace {

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

// row - f * pivot
SparseRow axpy(const SparseRow& row, const Rational& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -f * pivot[b].second);
      ++b;
    } else {
      Rational v = row[a].second - f * pivot[b].second;
      if (sgn(v) != 0) out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

// Row-echelon basis with pivots at the leftmost entry, normalized to 1.
class Echelon {
 public:
  int rank() const { return static_cast<int>(pivots_.size()); }
  bool has_pivot(int col) const { return pivots_.count(col) != 0; }

  // Reduces away leading entries only; returns true if the row was new.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      const auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      row = axpy(row, row.front().second, it->second);
    }
    if (row.empty()) return false;
    const Rational lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    const int col = row.front().first;
    pivots_.emplace(col, std::move(row));
    return true;
  }

  // Eliminates every pivot column, leaving a combination of free columns.
  SparseRow reduce(SparseRow row) const {
    std::size_t pos = 0;
    while (pos < row.size()) {
      const auto it = pivots_.find(row[pos].first);
      if (it == pivots_.end()) {
        ++pos;
        continue;
      }
      row = axpy(row, row[pos].second, it->second);
    }
    return row;
  }

 private:
  std::unordered_map<int, SparseRow> pivots_;
};

SparseRow from_pairs(std::vector<std::pair<int, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [c, v] : entries) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
    } else {
      out.emplace_back(c, std::move(v));
    }
  }
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  return out;
}

}  // namespace

// ---------------------------------------------------------------- QuotientRing

struct QuotientRing::Slice {
  std::vector<Monomial> live;                  // lexicographic order
  std::unordered_map<Monomial, int> column;    // live monomial -> column
  Echelon ideal;
};

QuotientRing::QuotientRing(RingPresentation presentation) : presentation_(std::move(presentation)) {
  if (presentation_.generator_count() > kMaxGenerators) {
    throw OutOfRange("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  }
  for (const auto& r : presentation_.relations) {
    if (r.degree < 1) throw std::invalid_argument("relations must have degree >= 1");
    for (const auto& t : r.terms) {
      if (monomial_degree(t.monomial) != r.degree) throw std::invalid_argument("relation is not homogeneous");
      if (t.monomial >> presentation_.generator_count()) throw std::invalid_argument("relation uses an unknown generator");
    }
  }
}

QuotientRing::~QuotientRing() = default;
QuotientRing::QuotientRing(QuotientRing&&) noexcept = default;
QuotientRing& QuotientRing::operator=(QuotientRing&&) noexcept = default;

QuotientRing::Slice& QuotientRing::slice(int k) {
  if (auto it = slices_.find(k); it != slices_.end()) return *it->second;
  auto s = std::make_unique<Slice>();
  const int g = presentation_.generator_count();

  // Monomial relations (single terms) kill whole monomials; the others are
  // multiplied out against every complementary monomial.
  std::vector<Monomial> killers;
  std::vector<const RingElement*> mixed;
  for (const auto& r : presentation_.relations) {
    if (r.terms.size() == 1) killers.push_back(r.terms.front().monomial);
    else if (!r.terms.empty()) mixed.push_back(&r);
  }
  auto dead = [&](Monomial m) {
    return std::any_of(killers.begin(), killers.end(), [&](Monomial kmask) { return (kmask & ~m) == 0; });
  };

  for (Monomial m : monomials_of_degree(g, k)) {
    if (!dead(m)) s->live.push_back(m);
  }
  std::sort(s->live.begin(), s->live.end(), monomial_lex_less);
  for (std::size_t c = 0; c < s->live.size(); ++c) s->column.emplace(s->live[c], static_cast<int>(c));

  for (const RingElement* r : mixed) {
    if (r->degree > k) continue;
    for (Monomial m : monomials_of_degree(g, k - r->degree)) {
      std::vector<std::pair<int, Rational>> entries;
      for (const auto& t : r->terms) {
        const int sign = koszul_sign(t.monomial, m);
        if (sign == 0) continue;
        const auto col = s->column.find(t.monomial | m);
        if (col == s->column.end()) continue;
        entries.emplace_back(col->second, Rational(t.coeff * sign));
      }
      SparseRow row = from_pairs(std::move(entries));
      if (!row.empty()) s->ideal.insert(std::move(row));
    }
  }
  return *slices_.emplace(k, std::move(s)).first->second;
}

int QuotientRing::rank(int k) {
  if (k < 0 || k > presentation_.generator_count()) return 0;
  Slice& s = slice(k);
  return static_cast<int>(s.live.size()) - s.ideal.rank();
}

std::vector<int> QuotientRing::ranks(int max_degree) {
  std::vector<int> out;
  for (int k = 0; k <= max_degree; ++k) out.push_back(rank(k));
  return out;
}

std::vector<Monomial> QuotientRing::basis(int k) {
  std::vector<Monomial> out;
  if (k < 0 || k > presentation_.generator_count()) return out;
  Slice& s = slice(k);
  for (std::size_t c = 0; c < s.live.size(); ++c) {
    if (!s.ideal.has_pivot(static_cast<int>(c))) out.push_back(s.live[c]);
  }
  return out;
}

RingElement QuotientRing::normal_form(const RingElement& x) {
  if (x.is_zero() || x.degree > presentation_.generator_count()) return RingElement::zero(x.degree);
  Slice& s = slice(x.degree);
  std::vector<std::pair<int, Rational>> entries;
  for (const auto& t : x.terms) {
    const auto col = s.column.find(t.monomial);
    if (col != s.column.end()) entries.emplace_back(col->second, Rational(t.coeff));
  }
  const SparseRow reduced = s.ideal.reduce(from_pairs(std::move(entries)));
  RingElement out{x.degree, {}};
  for (const auto& [c, v] : reduced) {
    if (v.get_den() != 1) throw Unsupported("normal form has non-integral coefficients");
    out.terms.push_back({v.get_num(), s.live[static_cast<std::size_t>(c)]});
  }
  normalize_terms(out.terms);
  return out;
}

RingElement QuotientRing::multiply(const RingElement& x, const RingElement& y) { return normal_form(wedge(x, y)); }

int QuotientRing::span_rank(const std::vector<RingElement>& elements) {
  Echelon span;
  for (const auto& x : elements) {
    if (x.is_zero() || x.degree > presentation_.generator_count()) continue;
    Slice& s = slice(x.degree);
    std::vector<std::pair<int, Rational>> entries;
    for (const auto& t : x.terms) {
      const auto col = s.column.find(t.monomial);
      if (col != s.column.end()) entries.emplace_back(col->second, Rational(t.coeff));
    }
    SparseRow reduced = s.ideal.reduce(from_pairs(std::move(entries)));
    if (!reduced.empty()) span.insert(std::move(reduced));
  }
  return span.rank();
}

int QuotientRing::annihilator_rank(int deg, int power) {
  const int g = presentation_.generator_count();
  const std::vector<Monomial> source = basis(deg);
  if (source.empty()) return 0;
  if (deg + power > g) return static_cast<int>(source.size());
  Slice& target = slice(deg + power);
  const auto width = static_cast<int>(target.live.size());
  const std::vector<Monomial> multipliers = monomials_of_degree(g, power);

  // Row b lists the reduced products b*m side by side, one block per m.
  Echelon image;
  for (Monomial b : source) {
    std::vector<std::pair<int, Rational>> entries;
    for (std::size_t mi = 0; mi < multipliers.size(); ++mi) {
      const int sign = koszul_sign(b, multipliers[mi]);
      if (sign == 0) continue;
      const auto col = target.column.find(b | multipliers[mi]);
      if (col == target.column.end()) continue;
      const SparseRow reduced = target.ideal.reduce({{col->second, Rational(sign)}});
      for (const auto& [c, v] : reduced) entries.emplace_back(static_cast<int>(mi) * width + c, v);
    }
    SparseRow row = from_pairs(std::move(entries));
    if (!row.empty()) image.insert(std::move(row));
  }
  return static_cast<int>(source.size()) - image.rank();
}

int graded_rank(const RingPresentation& p, int k) { return QuotientRing(p).rank(k); }

std::vector<int> graded_ranks(const RingPresentation& p, int max_degree) { return QuotientRing(p).ranks(max_degree); }

RingElement multiply(const RingPresentation& p, const RingElement& x, const RingElement& y) {
  return QuotientRing(p).multiply(x, y);
}

int annihilator_rank_ring(const RingPresentation& p, int deg, int power) {
  return QuotientRing(p).annihilator_rank(deg, power);
}

// ------------------------------------------------------- complex isomorphism

namespace {

Monomial transport(Monomial face, const std::vector<int>& phi) {
  Monomial out = 0;
  for (; face != 0; face &= face - 1) out |= Monomial{1} << phi[static_cast<std::size_t>(std::countr_zero(face))];
  return out;
}

std::vector<std::vector<int>> profiles(const SimplicialComplex& c, const std::vector<Monomial>& faces) {
  std::vector<std::vector<int>> prof(static_cast<std::size_t>(c.vertex_count()));
  for (Monomial f : faces) {
    const auto k = static_cast<std::size_t>(monomial_degree(f));
    for (int v : monomial_indices(f)) {
      auto& p = prof[static_cast<std::size_t>(v)];
      if (p.size() <= k) p.resize(k + 1, 0);
      ++p[k];
    }
  }
  return prof;
}

}  // namespace

std::optional<std::vector<int>> complex_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int nv = a.vertex_count();
  if (nv != b.vertex_count()) return std::nullopt;
  const std::vector<Monomial> faces_a = a.faces();
  const std::vector<Monomial> faces_b = b.faces();
  if (faces_a.size() != faces_b.size() || a.face_counts() != b.face_counts()) return std::nullopt;
  const std::unordered_set<Monomial> set_b(faces_b.begin(), faces_b.end());
  const auto prof_a = profiles(a, faces_a);
  const auto prof_b = profiles(b, faces_b);

  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    for (int w = 0; w < nv; ++w) {
      if (prof_a[static_cast<std::size_t>(v)] == prof_b[static_cast<std::size_t>(w)]) candidates[static_cast<std::size_t>(v)].push_back(w);
    }
    if (candidates[static_cast<std::size_t>(v)].empty()) return std::nullopt;
  }
  std::vector<int> order(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return candidates[static_cast<std::size_t>(x)].size() < candidates[static_cast<std::size_t>(y)].size();
  });

  std::vector<int> phi(static_cast<std::size_t>(nv), -1);
  std::vector<bool> used(static_cast<std::size_t>(nv), false);
  Monomial assigned = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    const Monomial vbit = Monomial{1} << v;
    for (int w : candidates[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      phi[static_cast<std::size_t>(v)] = w;
      const Monomial now = assigned | vbit;
      // Faces through v inside the assigned part must land on faces.
      const bool ok = std::all_of(faces_a.begin(), faces_a.end(), [&](Monomial f) {
        return !(f & vbit) || (f & ~now) != 0 || set_b.count(transport(f, phi)) != 0;
      });
      if (!ok) continue;
      used[static_cast<std::size_t>(w)] = true;
      assigned = now;
      if (extend(depth + 1)) return true;
      assigned &= ~vbit;
      used[static_cast<std::size_t>(w)] = false;
    }
    phi[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;

  // Equal face counts and an injective face map give a bijection; verify
  // the transport both ways anyway before returning.
  std::vector<int> inverse(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) inverse[static_cast<std::size_t>(phi[static_cast<std::size_t>(v)])] = v;
  const std::unordered_set<Monomial> set_a(faces_a.begin(), faces_a.end());
  for (Monomial f : faces_a) {
    if (!set_b.count(transport(f, phi))) return std::nullopt;
  }
  for (Monomial f : faces_b) {
    if (!set_a.count(transport(f, inverse))) return std::nullopt;
  }
  return phi;
}

SimplicialComplex flag_complex(const std::vector<std::string>& vertices, const std::vector<std::pair<int, int>>& edges) {
  const int nv = static_cast<int>(vertices.size());
  if (nv > kMaxGenerators) throw OutOfRange("too many vertices for a flag complex");
  std::vector<Monomial> adj(static_cast<std::size_t>(nv), 0);
  for (const auto& [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= nv || v >= nv) throw std::invalid_argument("bad edge in graph");
    adj[static_cast<std::size_t>(u)] |= Monomial{1} << v;
    adj[static_cast<std::size_t>(v)] |= Monomial{1} << u;
  }
  SimplicialComplex c{vertices, {}};
  // Bron-Kerbosch with pivoting.
  std::function<void(Monomial, Monomial, Monomial)> bk = [&](Monomial r, Monomial p, Monomial x) {
    if (p == 0 && x == 0) {
      if (r != 0) c.facets.push_back(r);
      return;
    }
    const int pivot = std::countr_zero(p | x);
    for (Monomial cand = p & ~adj[static_cast<std::size_t>(pivot)]; cand != 0; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      const Monomial bit = Monomial{1} << v;
      bk(r | bit, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)]);
      p &= ~bit;
      x |= bit;
    }
  };
  const Monomial all = nv == 0 ? 0 : static_cast<Monomial>((std::uint64_t{1} << nv) - 1);
  bk(0, all, 0);
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

}  // namespace polyspace
