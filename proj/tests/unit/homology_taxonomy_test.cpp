#include <doctest.h>

#include "polyspace/chambers.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/homology.hpp"
#include "polyspace/taxonomy.hpp"

using namespace polyspace;

namespace {

ChamberClass special(std::initializer_list<int> type) { return ChamberClass{ChamberClass::Kind::Special, SubsetMask::of(type)}; }

}  // namespace

TEST_CASE("a-vectors and Betti numbers") {
  CHECK(a_vector(LengthVector::of({1, 1, 1, 1, 1})) == std::vector<int>{1, 4, 0});
  CHECK(a_vector(LengthVector::of({1, 3, 3, 3, 4, 5})) == std::vector<int>{1, 5, 3, 0});
  CHECK(a_vector(LengthVector::of({1, 1, 1, 5})) == std::vector<int>{0, 0});

  CHECK(betti(LengthVector::of({1, 1, 1, 1, 1})) == BettiVector{1, 8, 1});
  CHECK(betti(LengthVector::of({1, 1, 2, 2, 3})) == BettiVector{1, 4, 1});
  CHECK(betti(LengthVector::of({1, 1, 4, 4, 5})) == BettiVector{2, 4, 2});
  CHECK(betti(LengthVector::of({1, 1, 1, 5})).empty());

  CHECK(euler_characteristic(LengthVector::of({1, 1, 1, 1, 1})) == -6);
  CHECK(euler_characteristic(LengthVector::of({1, 1, 2, 2, 3})) == -2);
  CHECK(euler_characteristic(LengthVector::of({1, 2, 2, 4})) == 0);
  CHECK_THROWS_AS(betti(LengthVector::of({1, 1, 1, 1})), NonGeneric);
}

TEST_CASE("Poincare duality and vanishing Euler characteristic in even dimension") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& e : enumerate_chambers(n).entries) {
      const BettiVector& b = e.betti;
      if (b.empty()) continue;
      for (std::size_t k = 0; k < b.size(); ++k) REQUIRE(b[k] == b[b.size() - 1 - k]);
      if ((n - 3) % 2 == 1) REQUIRE(euler_characteristic(b) == 0);
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify(LengthVector::of({1, 1, 1, 1, 1})) == special({1, 2, 3}));
  CHECK(classify(LengthVector::of({1, 1, 1, 1, 3})).kind == ChamberClass::Kind::Normal);
  CHECK(classify(LengthVector::of({1, 3, 3, 4, 4, 6})) == special({2, 4, 5}));
  CHECK(classify(LengthVector::of({1, 3, 3, 3, 4, 5})) == special({2, 3, 5}));
  CHECK(classify(LengthVector::of({1, 1, 4, 4, 5})).kind == ChamberClass::Kind::Disconnected);
  CHECK(classify(LengthVector::of({1, 1, 1, 5})).kind == ChamberClass::Kind::Empty);
  CHECK(classify(LengthVector::of({1, 1, 1})).kind == ChamberClass::Kind::Disconnected);

  for (const char* text : {"empty", "disconnected", "normal", "special {2,4,5}"}) CHECK(ChamberClass::parse(text).to_string() == text);
  CHECK_THROWS_AS(ChamberClass::parse("special"), ParseError);
}

TEST_CASE("every special type falls in one of the four families") {
  for (int n = 5; n <= 8; ++n) {
    for (const auto& e : enumerate_chambers(n).entries) {
      if (!e.cls.is_special()) continue;
      REQUIRE(type_family(e.cls.type, n).has_value());
    }
  }
  CHECK_FALSE(type_family(SubsetMask::of({1, 3, 5}), 7).has_value());
}

TEST_CASE("combinatorial annihilator ranks") {
  CHECK(annihilator_rank_combinatorial(LengthVector::of({1, 3, 3, 3, 4, 5}), 1, 1) == 1);
  CHECK(annihilator_rank_combinatorial(LengthVector::of({1, 3, 3, 4, 4, 6}), 1, 1) == 2);
  CHECK(annihilator_rank_combinatorial(LengthVector::of({1, 1, 1, 1, 1}), 1, 1) == 4);
  CHECK_THROWS_AS(annihilator_rank_combinatorial(LengthVector::of({1, 1, 1, 1, 1}), 1, 2), OutOfRange);
  CHECK_THROWS_AS(annihilator_rank_combinatorial(LengthVector::of({1, 1, 1, 1, 1}), 0, 1), OutOfRange);
  CHECK(annihilator_rank_or_zero(chamber_signature(LengthVector::of({1, 1, 1, 1, 1})), 1, 2) == 0);
}

TEST_CASE("d-invariants") {
  CHECK(d_invariants(LengthVector::of({1, 1, 1, 1, 1})) == DInvariants{0, 0, 0});
  CHECK(d_invariants(LengthVector::of({1, 3, 3, 3, 4, 5})) == DInvariants{1, 0, 1});
  CHECK(d_invariants(LengthVector::of({1, 3, 3, 4, 4, 6})) == DInvariants{2, 0, 2});
  CHECK_THROWS_AS(d_invariants(LengthVector::of({1, 1, 1, 1, 3})), NotSpecial);
}

TEST_CASE("closed-form Betti numbers of special chambers") {
  auto c = bettispecial_crosscheck(LengthVector::of({1, 1, 1, 1, 1}));
  CHECK(c.pass);
  CHECK(c.b1_formula == 8);
  c = bettispecial_crosscheck(LengthVector::of({1, 3, 3, 4, 4, 6}));
  CHECK(c.pass);
  CHECK(c.b1_formula == 7);
  c = bettispecial_crosscheck(LengthVector::of({1, 3, 3, 3, 4, 5}));
  CHECK(c.pass);
  CHECK(c.b1_formula == 8);
  REQUIRE(c.b2_formula);
  CHECK(*c.b2_formula == 8);
  CHECK_THROWS_AS(bettispecial_crosscheck(LengthVector::of({1, 1, 1, 1, 3})), NotSpecial);
}

TEST_CASE("type separation") {
  for (int n = 5; n <= 6; ++n) {
    const auto r = sametype_separation(enumerate_chambers(n));
    CHECK(r.pass());
    CHECK(r.special_chambers > 0);
  }
  ChamberCatalog single;
  single.n = 5;
  single.entries.push_back(make_catalog_entry(chamber_signature(LengthVector::of({1, 1, 1, 1, 1}))));
  const auto r = sametype_separation(single);
  CHECK(r.pass());
  CHECK(r.pairs_checked == 0);
}
