#include <doctest.h>

#include <numeric>
#include <random>

#include "polyspace/errors.hpp"
#include "polyspace/homology.hpp"
#include "polyspace/morse.hpp"
#include "polyspace/presentations.hpp"
#include "polyspace/walker.hpp"

using namespace polyspace;

namespace {

LengthVector random_ordered(std::mt19937& rng, int n) {
  std::vector<long> raw(static_cast<std::size_t>(n));
  long total = 0;
  do {
    for (long& x : raw) x = std::uniform_int_distribution<long>(1, 30)(rng);
    total = std::accumulate(raw.begin(), raw.end(), 0L);
  } while (total % 2 == 0);
  std::sort(raw.begin(), raw.end());
  return LengthVector(std::vector<Rational>(raw.begin(), raw.end()));
}

// Renames generators by a permutation with signs and rewrites every relation
// accordingly, so the result is the same ring under different labels.
RingPresentation relabel(const RingPresentation& p, const std::vector<int>& perm, const std::vector<int>& sign) {
  RingPresentation q;
  q.generators.resize(p.generators.size());
  for (std::size_t g = 0; g < perm.size(); ++g) q.generators[static_cast<std::size_t>(perm[g])] = p.generators[g];
  for (const auto& r : p.relations) {
    RingElement out = RingElement::zero(r.degree);
    for (const Term& t : r.terms) {
      std::vector<int> gens;
      int s = 1;
      for (int g : monomial_indices(t.monomial)) {
        gens.push_back(perm[static_cast<std::size_t>(g)]);
        s *= sign[static_cast<std::size_t>(g)];
      }
      out = out + RingElement::product_of(gens) * Integer(t.coeff * s);
    }
    q.relations.push_back(out);
  }
  return q;
}

}  // namespace

TEST_CASE("critical points of the worked examples") {
  auto pts = critical_points(LengthVector::of({1, 1, 2, 2, 3}));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].j == SubsetMask::of({3, 4}));
  CHECK(pts[0].index == 2);
  CHECK(pts[0].t == Rational(1, 2));
  CHECK(pts[0].u == std::vector<int>{1, 1, -1, -1, 1});

  pts = critical_points(LengthVector::of({1, 1, 1, 1, 1}));
  REQUIRE(pts.size() == 3);
  for (const auto& q : pts) {
    CHECK(q.index == 2);
    CHECK(q.t == Rational(1, 2));
  }
  CHECK(pts[0].j == SubsetMask::of({2, 3}));

  pts = critical_points(LengthVector::of({1, 2, 2, 4}));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].j == SubsetMask::of({2, 3}));

  // J = {2,3,4} is short (3 < 4) while {1,2,3,4} is long (4 > 3): a single
  // index-3 point that removes the sphere.
  pts = critical_points(LengthVector::of({1, 1, 1, 1, 3}));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].j == SubsetMask::of({2, 3, 4}));
  CHECK(pts[0].index == 3);

  CHECK_THROWS_AS(critical_points(LengthVector::of({2, 1, 3})), NotOrdered);
  CHECK_THROWS_AS(critical_points(LengthVector::of({1, 1, 1, 1})), NonGeneric);
}

TEST_CASE("reduction targets") {
  auto step = reduction(LengthVector::of({1, 3, 3, 4, 4, 6}));
  CHECK(step.target == LengthVector::of({3, 3, 4, 4, 7}));
  CHECK(classify(step.target).to_string() == "special {1,3,4}");
  step = reduction(LengthVector::of({1, 3, 3, 3, 4, 5}));
  CHECK(step.target == LengthVector::of({3, 3, 3, 4, 6}));
  CHECK(classify(step.target).to_string() == "special {1,2,4}");
  step = reduction(LengthVector::of({1, 1, 2, 2, 3}));
  CHECK(step.target == LengthVector::of({1, 2, 2, 4}));
  CHECK(step.epsilon > 0);
  CHECK(step.epsilon < Rational(1, 2));
  CHECK_THROWS_AS(reduction(LengthVector::of({1, 1, 1})), DomainError);
}

TEST_CASE("subset bijection on the worked examples") {
  auto b = check_subset_bijection(LengthVector::of({1, 1, 2, 2, 3}));
  CHECK(b.pass());
  CHECK(b.removed == std::vector<SubsetMask>{SubsetMask::of({2})});
  b = check_subset_bijection(LengthVector::of({1, 1, 1, 1, 1}));
  CHECK(b.pass());
  CHECK(b.removed.size() == 3);
  CHECK(check_subset_bijection(LengthVector::of({1, 1, 1, 1, 3})).pass());
}

TEST_CASE("Morse bookkeeping on random ordered vectors") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 400; ++trial) {
    const LengthVector ell = random_ordered(rng, 5 + trial % 4);
    CAPTURE(ell.to_string());
    REQUIRE(check_subset_bijection(ell).pass());
    REQUIRE(index_census(ell).pass());
    REQUIRE(euler_check(ell).pass());
    for (const auto& q : critical_points(ell)) REQUIRE((q.t > 0 && q.t < ell.length(1)));
  }
}

TEST_CASE("fingerprints") {
  const auto a = fingerprint(LengthVector::of({1, 1, 1, 1, 1}));
  const auto b = fingerprint(LengthVector::of({1, 1, 2, 2, 3}));
  CHECK(a.betti != b.betti);
  CHECK(fingerprint(LengthVector::of({1, 1, 1, 2, 2})) == fingerprint(LengthVector::of({2, 2, 3, 5, 5})));
  const auto d = fingerprint(LengthVector::of({1, 1, 4, 4, 5}));
  CHECK(d.class_tag.kind == ChamberClass::Kind::Disconnected);
  CHECK(d.betti == BettiVector{2, 4, 2});
  CHECK(a.serialize() == fingerprint(LengthVector::of({1, 1, 1, 1, 1})).serialize());
}

TEST_CASE("walker verification for small n") {
  const auto four = verify_walker(4);
  CHECK(four.pairs.size() == 3);
  CHECK(four.tier_counts.at(1) == 3);
  const auto five = verify_walker(5);
  CHECK(five.pass());
  CHECK(five.tier_counts.at(1) == five.pairs.size());
  const auto six = verify_walker(6);
  CHECK(six.pass());
  CHECK(six.unexplained() == 0);
  CHECK(six.tier_counts.at(1) < six.pairs.size());
  CHECK_THROWS_AS(verify_walker(8), OutOfRange);
}

TEST_CASE("monomial presentation equivalence") {
  const auto genus = present_h1(LengthVector::of({1, 1, 2, 2, 3})).presentation;
  CHECK(presentation_equivalent_monomial(genus, genus));

  SUBCASE("exchanging the A and B generators") {
    const int a1 = genus.index_of("A_1"), a2 = genus.index_of("A_2"), b1 = genus.index_of("B_1"), b2 = genus.index_of("B_2");
    REQUIRE((a1 >= 0 && a2 >= 0 && b1 >= 0 && b2 >= 0));
    std::vector<int> perm(4);
    perm[static_cast<std::size_t>(a1)] = b1;
    perm[static_cast<std::size_t>(b1)] = a1;
    perm[static_cast<std::size_t>(a2)] = b2;
    perm[static_cast<std::size_t>(b2)] = a2;
    const auto swapped = relabel(genus, perm, {1, 1, 1, 1});
    CHECK(swapped.relations != genus.relations);
    CHECK(presentation_equivalent_monomial(genus, swapped));
  }

  SUBCASE("random signed relabelings are recognized") {
    const auto p = present_h1(LengthVector::of({1, 3, 3, 4, 4, 6})).presentation;
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(p.generator_count()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> sign;
      for (std::size_t i = 0; i < perm.size(); ++i) sign.push_back(rng() % 2 ? 1 : -1);
      const auto q = relabel(p, perm, sign);
      const auto map = presentation_equivalent_monomial(p, q);
      REQUIRE(map);
      // The returned map carries every relation into the other ideal.
      QuotientRing target(q);
      for (const auto& r : p.relations) {
        const auto image = relabel(RingPresentation{p.generators, {r}}, map->target, map->sign).relations.front();
        CHECK(target.is_zero(image));
      }
    }
  }

  CHECK_FALSE(presentation_equivalent_monomial(genus, present_h1(LengthVector::of({1, 1, 1, 2, 2})).presentation));
  const auto normal = present_h1(LengthVector::of({1, 1, 1, 2, 2})).presentation;
  const auto other = present_h1(LengthVector::of({1, 1, 1, 1, 1})).presentation;
  if (normal.generator_count() == other.generator_count()) CHECK_FALSE(presentation_equivalent_monomial(normal, other));
}
