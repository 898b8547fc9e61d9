#include <doctest.h>

#include "oracles.hpp"
#include "polyspace/chambers.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/lp.hpp"

using namespace polyspace;

namespace {

std::vector<SubsetMask> family(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<SubsetMask> out;
  for (auto s : sets) out.push_back(SubsetMask::of(s));
  return out;
}

GeneticCode code(int n, std::initializer_list<std::initializer_list<int>> sets) { return GeneticCode{n, family(sets)}; }

}  // namespace

TEST_CASE("exact simplex") {
  // max x + y  s.t.  x + 2y <= 4, 3x + y <= 6
  lp::Problem p{{{1, 2}, {3, 1}}, {4, 6}, {1, 1}};
  auto s = lp::maximize(p);
  REQUIRE(s);
  CHECK(s->objective == Rational(14, 5));
  CHECK(s->x[0] == Rational(8, 5));
  CHECK(s->x[1] == Rational(6, 5));

  lp::Problem unbounded{{{1, -1}}, {1}, {0, 1}};
  CHECK_FALSE(lp::maximize(unbounded));
  CHECK_THROWS_AS(lp::maximize(lp::Problem{{{1}}, {-1}, {1}}), std::invalid_argument);
}

TEST_CASE("realizability of genetic codes") {
  auto w = realizable(5, code(5, {{2}}));
  REQUIRE(w);
  CHECK(chamber_signature(*w).shorts == family({{}, {1}, {2}}));

  w = realizable(5, code(5, {{1, 2}}));
  REQUIRE(w);
  CHECK(chamber_signature(*w).shorts == family({{}, {1}, {2}, {1, 2}}));

  CHECK_FALSE(realizable(5, code(5, {{1, 3}})));

  CHECK_THROWS_AS(realizable(5, code(5, {{1}, {2}})), InvalidAntichain);
  CHECK_THROWS_AS(realizable(5, code(5, {{1, 2, 3}})), InvalidAntichain);
  CHECK_THROWS_AS(realizable(5, code(5, {{5}})), InvalidAntichain);
}

TEST_CASE("representatives land in their chamber") {
  const auto sig = chamber_signature(LengthVector::of({1, 1, 2, 2, 3}));
  CHECK(chamber_signature(representative(sig)) == sig);

  const ChamberSignature empty4{4, {}};
  const LengthVector e = representative(empty4);
  CHECK(chamber_signature(e).shorts.empty());

  const auto torus = chamber_signature(LengthVector::of({1, 1, 4, 4, 5}));
  CHECK(chamber_signature(representative(torus)) == torus);

  CHECK_THROWS_AS(representative(ChamberSignature{5, family({{}, {1}, {3}})}), Unrealizable);
}

TEST_CASE("small catalogs by hand") {
  CHECK(enumerate_chambers(3).entries.size() == 2);
  const ChamberCatalog four = enumerate_chambers(4);
  REQUIRE(four.entries.size() == 3);
  CHECK(four.entries[0].signature.shorts.empty());
  CHECK(four.entries[1].signature.shorts == family({{}}));
  CHECK(four.entries[2].signature.shorts == family({{}, {1}}));
  CHECK(enumerate_chambers(5).entries.size() == 7);
  CHECK_THROWS_AS(enumerate_chambers(2), OutOfRange);
  CHECK_THROWS_AS(enumerate_chambers(kMaxEnumerationBars + 1), OutOfRange);
}

TEST_CASE("enumeration agrees with integer sampling") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    std::set<std::vector<std::uint32_t>> listed;
    for (const auto& e : enumerate_chambers(n).entries) {
      std::vector<std::uint32_t> key;
      for (SubsetMask m : e.signature.shorts) key.push_back(m.bits());
      listed.insert(key);
    }
    CHECK(listed == oracle::sampled_chambers(n, 9));
  }
}

TEST_CASE("catalog entries are consistent and parallel enumeration is deterministic") {
  const ChamberCatalog serial = enumerate_chambers(6, 1);
  const ChamberCatalog parallel = enumerate_chambers(6, 3);
  REQUIRE(serial.entries.size() == parallel.entries.size());
  for (std::size_t i = 0; i < serial.entries.size(); ++i) {
    const CatalogEntry& e = serial.entries[i];
    CHECK(e.signature == parallel.entries[i].signature);
    CHECK(chamber_signature(e.representative) == e.signature);
    CHECK(genetic_code(e.signature) == e.code);
    CHECK(e.representative.is_ordered());
    if (i > 0) CHECK(signature_less(serial.entries[i - 1].signature, e.signature));
  }
}
