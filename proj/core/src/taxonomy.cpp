#include "polyspace/taxonomy.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "polyspace/chambers.hpp"
#include "polyspace/errors.hpp"

namespace polyspace {

std::string ChamberClass::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Disconnected: return "disconnected";
    case Kind::Normal: return "normal";
    case Kind::Special: return "special " + type.to_string();
  }
  return "?";
}

ChamberClass ChamberClass::parse(const std::string& text) {
  if (text == "empty") return {Kind::Empty, {}};
  if (text == "disconnected") return {Kind::Disconnected, {}};
  if (text == "normal") return {Kind::Normal, {}};
  const std::string prefix = "special {";
  if (text.rfind(prefix, 0) == 0 && text.back() == '}') {
    std::vector<int> idx;
    const std::string body = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      try {
        std::size_t used = 0;
        idx.push_back(std::stoi(item, &used));
        if (used != item.size()) throw ParseError("bad index");
      } catch (const std::exception&) {
        throw ParseError("malformed chamber class '" + text + "'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (idx.size() == 3) return {Kind::Special, SubsetMask::of(std::span<const int>(idx))};
  }
  throw ParseError("malformed chamber class '" + text + "'");
}

std::optional<TypeInfo> type_family(SubsetMask type, int n) {
  if (type.size() != 3) return std::nullopt;
  if (type == SubsetMask::of({n - 3, n - 2, n - 1})) return TypeInfo{TypeFamily::TopTriple, n - 3};
  if (n >= 5 && type == SubsetMask::of({n - 4, n - 3, n - 1})) return TypeInfo{TypeFamily::SkipOne, n - 4};
  if (n >= 5 && type == SubsetMask::of({n - 4, n - 3, n - 2})) return TypeInfo{TypeFamily::LowTriple, n - 4};
  const SubsetMask top = SubsetMask::of({n - 2, n - 1});
  if (n >= 5 && top.subset_of(type)) {
    const int i = (type - top).min();
    if (i >= 1 && i <= n - 4) return TypeInfo{TypeFamily::PairTop, i};
  }
  return std::nullopt;
}

ChamberClass classify(const ChamberSignature& sig) {
  const int n = sig.n;
  if (!sig.contains(SubsetMask())) return {ChamberClass::Kind::Empty, {}};
  if (!sig.stratum(n - 3).empty()) return {ChamberClass::Kind::Disconnected, {}};
  const std::vector<SubsetMask> below = sig.stratum(n - 4);
  if (below.empty()) return {ChamberClass::Kind::Normal, {}};
  // The stratum is a chain, so its maximum is the element above all others.
  SubsetMask top = below.front();
  for (SubsetMask j : below) {
    if (poset_leq(top, j)) top = j;
  }
  return {ChamberClass::Kind::Special, top.complement(n - 1)};
}

ChamberClass classify(const LengthVector& ell) { return classify(chamber_signature(ell)); }

namespace {

int count_unextendable(const ChamberSignature& sig, int k, int i) {
  const std::vector<SubsetMask> upper = sig.stratum(k + i);
  int count = 0;
  for (SubsetMask small : sig.stratum(k)) {
    if (std::none_of(upper.begin(), upper.end(), [&](SubsetMask big) { return small.subset_of(big); })) ++count;
  }
  return count;
}

void require_connected(const ChamberSignature& sig) {
  if (!classify(sig).is_connected()) throw Unsupported("annihilator ranks need a connected nonempty polygon space");
}

}  // namespace

int annihilator_rank_combinatorial(const ChamberSignature& sig, int k, int i) {
  require_connected(sig);
  if (k < 1 || i < 1 || k + i > sig.n - 3) {
    throw OutOfRange("annihilator index (k=" + std::to_string(k) + ", i=" + std::to_string(i) + ") needs k,i >= 1 and k+i <= " +
                     std::to_string(sig.n - 3));
  }
  return count_unextendable(sig, k, i);
}

int annihilator_rank_combinatorial(const LengthVector& ell, int k, int i) {
  return annihilator_rank_combinatorial(chamber_signature(ell), k, i);
}

int annihilator_rank_or_zero(const ChamberSignature& sig, int k, int i) {
  require_connected(sig);
  if (k < 1 || i < 1 || k + i > sig.n - 3) return 0;
  return count_unextendable(sig, k, i);
}

DInvariants d_invariants(const ChamberSignature& sig) {
  if (!classify(sig).is_special()) throw NotSpecial("d-invariants are defined for special chambers only");
  const int n = sig.n;
  return {annihilator_rank_or_zero(sig, 1, n - 5), annihilator_rank_or_zero(sig, 2, n - 6), annihilator_rank_or_zero(sig, n - 5, 1)};
}

DInvariants d_invariants(const LengthVector& ell) { return d_invariants(chamber_signature(ell)); }

namespace {

int choose2(int m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace

BettiCrosscheck bettispecial_crosscheck(const ChamberSignature& sig) {
  const ChamberClass cls = classify(sig);
  if (!cls.is_special()) throw NotSpecial("closed-form Betti numbers are stated for special chambers only");
  const int n = sig.n;
  const auto info = type_family(cls.type, n);
  if (!info) throw WrongType("type " + cls.type.to_string() + " is not one of the possible special types");
  const DInvariants d = d_invariants(sig);
  const BettiVector b = betti(sig);

  BettiCrosscheck r;
  r.b1_actual = b.size() > 1 ? b[1] : 0;
  switch (info->family) {
    case TypeFamily::LowTriple:
      r.formula_case = 1;
      r.b1_formula = n + 3;
      r.b2_formula = choose2(n - 5) + 8 * (n - 5) + 1;
      break;
    case TypeFamily::SkipOne:
      r.formula_case = 2;
      r.b1_formula = n + 1 + d.d1;
      r.b2_formula = choose2(n - 5) + 6 * (n - 5) + 1 + d.d2 + d.d3;
      break;
    case TypeFamily::TopTriple:
      r.formula_case = 3;
      r.b1_formula = n - 3 + d.d1;
      break;
    case TypeFamily::PairTop: {
      r.formula_case = 4;
      const int i = info->i;
      r.b1_formula = 2 * n - 5 - i + d.d1;
      if (i <= n - 5) {
        int tail = 0;
        for (int m = i - 1; m <= n - 4; ++m) tail += m;
        r.b2_formula = choose2(n - 3) + tail + d.d2 + d.d3;
      }
      break;
    }
  }
  if (r.b2_formula) r.b2_actual = b.size() > 2 ? b[2] : 0;
  r.pass = r.b1_formula == r.b1_actual && r.b2_formula == r.b2_actual;
  return r;
}

BettiCrosscheck bettispecial_crosscheck(const LengthVector& ell) { return bettispecial_crosscheck(chamber_signature(ell)); }

SametypeReport sametype_separation(const ChamberCatalog& catalog) {
  SametypeReport report;
  // Group the special chambers by (Betti vector, d-invariants).
  using Key = std::tuple<BettiVector, int, int, int>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t idx = 0; idx < catalog.entries.size(); ++idx) {
    const CatalogEntry& e = catalog.entries[idx];
    if (!e.cls.is_special()) continue;
    ++report.special_chambers;
    const DInvariants d = d_invariants(e.signature);
    groups[{e.betti, d.d1, d.d2, d.d3}].push_back(idx);
  }
  for (const auto& [key, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        ++report.pairs_checked;
        if (catalog.entries[members[a]].cls.type != catalog.entries[members[b]].cls.type) {
          report.violations.push_back({members[a], members[b]});
        }
      }
    }
  }
  return report;
}

}  // namespace polyspace
