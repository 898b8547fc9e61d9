// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "polyspace/chambers.hpp"
#include "polyspace/homology.hpp"
#include "polyspace/morse.hpp"
#include "polyspace/presentations.hpp"
#include "polyspace/taxonomy.hpp"
#include "polyspace/walker.hpp"
#include "unit/oracles.hpp"

using namespace polyspace;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string vec(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

const ChamberCatalog& catalog(int n) {
  static std::map<int, ChamberCatalog> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_chambers(n, 0)).first;
  return it->second;
}

Outcome surface_chambers() {
  const auto t0 = Clock::now();
  const BettiVector genus4 = betti(LengthVector::of({1, 1, 1, 1, 1}));
  const BettiVector genus2 = betti(LengthVector::of({1, 1, 2, 2, 3}));
  const BettiVector two_tori = betti(LengthVector::of({1, 1, 4, 4, 5}));
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = genus4 == BettiVector{1, 8, 1} && genus2 == BettiVector{1, 4, 1} && two_tori == BettiVector{2, 4, 2} && t < 1.0;
  o.detail = "genus 4 " + vec(genus4) + ", genus 2 " + vec(genus2) + ", two tori " + vec(two_tori);
  return o;
}

Outcome closed_form_betti() {
  Outcome o;
  std::map<int, int> cases;
  std::size_t checked = 0;
  for (int n = 5; n <= 8; ++n) {
    for (const auto& e : catalog(n).entries) {
      if (!e.cls.is_special()) continue;
      const auto c = bettispecial_crosscheck(e.signature);
      ++checked;
      ++cases[c.formula_case];
      if (!c.pass) {
        o.pass = false;
        o.detail += "mismatch at " + e.representative.to_string() + "; ";
      }
    }
  }
  o.pass = o.pass && cases.size() == 4;
  std::ostringstream os;
  os << checked << " special chambers for n=5..8, per case";
  for (const auto& [k, count] : cases) os << " " << k << ":" << count;
  o.detail += os.str();
  return o;
}

Outcome presentation_betti() {
  Outcome o;
  std::ostringstream os;
  std::size_t special = 0;
  std::size_t deficit_bad = 0;
  for (int n = 5; n <= 7; ++n) {
    std::size_t rank_bad = 0;
    std::string example;
    for (const auto& e : catalog(n).entries) {
      if (!e.cls.is_special()) continue;
      ++special;
      QuotientRing ring(present_h1(e.signature).presentation);
      const auto ranks = ring.ranks(n - 3);
      bool ok = true;
      for (int k = 0; k <= n - 3; ++k) {
        if (k != n - 4 && ranks[static_cast<std::size_t>(k)] != e.betti[static_cast<std::size_t>(k)]) ok = false;
      }
      if (!ok) {
        ++rank_bad;
        if (example.empty()) example = e.representative.to_string() + " (" + e.cls.to_string() + ") ranks " + vec(ranks) + " vs betti " + vec(e.betti);
      }
      if (h1_deficit(e.signature) != expected_deficit(e.signature)) ++deficit_bad;
    }
    os << "n=" << n << ": " << rank_bad << " chambers with rank_k != b_k for some k != n-4";
    if (!example.empty()) os << ", e.g. " << example;
    os << "; ";
    if (rank_bad) o.pass = false;
  }
  os << "deficit mismatches " << deficit_bad << " of " << special;
  if (deficit_bad) o.pass = false;
  o.detail = os.str();
  return o;
}

Outcome balanced_subalgebra_ranks() {
  Outcome o;
  std::size_t connected = 0, restricted = 0, bad = 0;
  for (int n = 5; n <= 7; ++n) {
    for (const auto& e : catalog(n).entries) {
      if (!e.cls.is_connected()) continue;
      ++connected;
      const auto ph = present_h1(e.signature);
      const auto expect = restricted_a_vector(e.signature, ph.pinned());
      if (expect != a_vector(e.representative)) ++restricted;
      if (torus_image_ranks(ph) != expect || !balanced_embedding_violations(ph, e.signature).empty()) ++bad;
    }
  }
  o.pass = bad == 0;
  std::ostringstream os;
  os << connected << " connected chambers for n=5..7, " << bad << " mismatches; " << restricted
     << " compared on the indices whose torus image the presentation determines";
  o.detail = os.str();
  return o;
}

Outcome annihilator_routes() {
  Outcome o;
  std::size_t inner_pairs = 0, inner_bad = 0, top_pairs = 0, top_bad = 0, ann_cases = 0, ann_bad = 0;
  for (int n = 5; n <= 7; ++n) {
    for (const auto& e : catalog(n).entries) {
      if (!e.cls.is_special()) continue;
      const auto& sig = e.signature;
      QuotientRing ring(present_h1(sig).presentation);
      for (int k = 1; k <= n - 4; ++k) {
        for (int i = 1; k + i <= n - 3; ++i) {
          const bool same = ring.annihilator_rank(k, i) == annihilator_rank_combinatorial(sig, k, i);
          if (k + i < n - 3) {
            ++inner_pairs;
            inner_bad += !same;
          } else {
            ++top_pairs;
            top_bad += !same;
          }
        }
      }
      // Annihilator of all (n-4)-fold products in degree one.
      const auto info = type_family(e.cls.type, n);
      std::optional<int> expected;
      if (info->family == TypeFamily::PairTop) {
        expected = static_cast<int>(sig.contains(SubsetMask::of({n - 2}))) + static_cast<int>(sig.contains(SubsetMask::of({n - 1})));
      } else if (info->family == TypeFamily::SkipOne && sig.contains(SubsetMask::of({n - 1}))) {
        expected = 1;
      }
      if (expected) {
        ++ann_cases;
        if (ring.annihilator_rank(1, n - 4) != *expected) ++ann_bad;
      }
    }
  }
  const int worked_a = annihilator_rank_ring(present_h1(LengthVector::of({1, 3, 3, 4, 4, 6})).presentation, 1, 2);
  const int worked_b = annihilator_rank_ring(present_h1(LengthVector::of({1, 3, 3, 3, 4, 5})).presentation, 1, 2);
  const int comb_a = annihilator_rank_combinatorial(LengthVector::of({1, 3, 3, 4, 4, 6}), 1, 2);
  o.pass = inner_bad == 0 && top_bad == 0 && ann_bad == 0 && worked_a == 2 && worked_b == 1;
  std::ostringstream os;
  os << "routes agree on " << inner_pairs - inner_bad << "/" << inner_pairs << " pairs with k+i<n-3 and " << top_pairs - top_bad << "/" << top_pairs
     << " pairs with k+i=n-3; degree-one annihilator values " << ann_cases - ann_bad << "/" << ann_cases << "; worked values ring " << worked_a
     << " and " << worked_b << " (combinatorial count " << comb_a << " for 1,3,3,4,4,6)";
  o.detail = os.str();
  return o;
}

Outcome morse_bookkeeping() {
  Outcome o;
  std::mt19937 rng(20261019);
  std::size_t bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + trial % 4;
    std::vector<long> raw(static_cast<std::size_t>(n));
    do {
      for (long& x : raw) x = std::uniform_int_distribution<long>(1, 40)(rng);
    } while (std::accumulate(raw.begin(), raw.end(), 0L) % 2 == 0);
    std::sort(raw.begin(), raw.end());
    const LengthVector ell(std::vector<Rational>(raw.begin(), raw.end()));
    if (!check_subset_bijection(ell).pass() || !index_census(ell).pass()) ++bad;
  }
  const auto pts = critical_points(LengthVector::of({1, 1, 2, 2, 3}));
  const bool worked = pts.size() == 1 && pts[0].j == SubsetMask::of({3, 4}) && pts[0].index == 2 && pts[0].t == Rational(1, 2);
  o.pass = bad == 0 && worked;
  o.detail = std::to_string(200 - bad) + "/200 random vectors pass; (1,1,2,2,3) gives " + std::to_string(pts.size()) + " critical point(s)" +
             (pts.empty() ? "" : ", J=" + pts[0].j.to_string() + " index " + std::to_string(pts[0].index) + " t=" + to_string(pts[0].t));
  return o;
}

Outcome enumeration_oracle() {
  Outcome o;
  std::ostringstream os;
  for (int n = 3; n <= 6; ++n) {
    std::set<std::vector<std::uint32_t>> listed;
    for (const auto& e : catalog(n).entries) {
      std::vector<std::uint32_t> key;
      for (SubsetMask m : e.signature.shorts) key.push_back(m.bits());
      listed.insert(key);
    }
    const bool agree = listed == oracle::sampled_chambers(n, 9);
    o.pass = o.pass && agree;
    os << "n=" << n << ": " << listed.size() << (agree ? " (agree) " : " (DISAGREE) ");
  }
  o.pass = o.pass && catalog(3).entries.size() == 2 && catalog(4).entries.size() == 3;
  o.detail = os.str();
  return o;
}

Outcome walker() {
  Outcome o;
  const WalkerReport five = verify_walker(catalog(5));
  const auto t0 = Clock::now();
  const WalkerReport six = verify_walker(catalog(6));
  const double t = seconds_since(t0);
  const std::size_t five_t1 = five.tier_counts.count(1) ? five.tier_counts.at(1) : 0;
  const std::size_t six_t1 = six.tier_counts.count(1) ? six.tier_counts.at(1) : 0;
  o.pass = five_t1 == five.pairs.size() && six_t1 < six.pairs.size() && six.unexplained() == 0 && t < 600;
  std::ostringstream os;
  os << "n=5: " << five_t1 << "/" << five.pairs.size() << " at tier 1; n=6: " << six.pairs.size() - six_t1 << " Betti collisions, " << six.unexplained()
     << " unexplained, " << t << " s";
  o.detail = os.str();
  return o;
}

Outcome type_separation() {
  Outcome o;
  std::ostringstream os;
  for (int n = 5; n <= 7; ++n) {
    const auto r = sametype_separation(catalog(n));
    o.pass = o.pass && r.pass();
    os << "n=" << n << ": " << r.violations.size() << " violations over " << r.special_chambers << " special chambers; ";
  }
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"surface chambers", surface_chambers},
      {"closed-form Betti numbers", closed_form_betti},
      {"presentation ranks against Betti numbers", presentation_betti},
      {"balanced subalgebra ranks", balanced_subalgebra_ranks},
      {"annihilator ranks by two routes", annihilator_routes},
      {"Morse bookkeeping", morse_bookkeeping},
      {"chamber enumeration against sampling", enumeration_oracle},
      {"walker verification", walker},
      {"type separation", type_separation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    const Outcome o = criteria[i].second();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail << " [" << seconds_since(t0) << " s]"
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
