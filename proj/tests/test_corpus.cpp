#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "orb/corpus.hpp"
#include "orb/strata.hpp"
#include "orb/verify.hpp"

using namespace orb;

TEST_CASE("every corpus entry is valid with the expected chi") {
  const auto& entries = allEntries();
  CHECK(entries.size() >= 20);
  std::set<std::string> names;
  for (const auto& e : entries) {
    INFO("entry ", e.name);
    CHECK(names.insert(e.name).second);
    CHECK(validate(e.orbifold).empty());
    REQUIRE(e.expectedChi.has_value());
    CHECK(eulerChar(e.orbifold) == *e.expectedChi);
  }
  CHECK(entryByName("teardrop3").expectedChi == Rational(4, 3));
  CHECK(entryByName("d3_t24").expectedChi == Rational(1, 24));
  CHECK_THROWS_AS(entryByName("nope"), Error);
}

TEST_CASE("dim-1 entries match the table") {
  CHECK(*entryByName("interval").expectedChi == Rational(1));
  CHECK(*entryByName("s1").expectedChi == Rational(0));
  CHECK(*entryByName("m1").expectedChi == Rational(1, 2));
  CHECK(*entryByName("m2").expectedChi == Rational(0));
}

TEST_CASE("bad 2-orbifold builders") {
  auto fam = buildBad2(3, 4, 5);
  CHECK(eulerChar(fam[0].orbifold) == Rational(4, 3));
  CHECK(eulerChar(fam[1].orbifold) == Rational(1, 3) + Rational(1, 4));
  CHECK(eulerChar(fam[2].orbifold) ==
        Rational(2) - Rational(2, 3) - Rational(3, 4) - Rational(4, 5));
  CHECK_THROWS_AS(buildBad2(1, 2, 2), Error);
}

TEST_CASE("disk quotient actions satisfy covering multiplicativity") {
  for (const auto& act : corpusActions()) {
    INFO("action ", act.name);
    CHECK(isRegular(act.action));
    CHECK(coveringMultiplicativityCheck(act.action));
    OrbifoldComplex q = quotient(act.action, act.boundaryFaces);
    CHECK(Rational(eulerCharTop(act.action.complex)) ==
          Rational(act.action.group.order()) * eulerChar(q));
  }
}

TEST_CASE("double of m1 marries the corpus m2 cell for cell") {
  OrbifoldComplex dm1 = doubleAlongBoundary(entryByName("m1").orbifold);
  const OrbifoldComplex& m2 = entryByName("m2").orbifold;
  // Corpus m2 is the path a-b-c; double(m1) is the path a-b-a~2. The renaming
  // a~2 -> c is a label-preserving isomorphism.
  auto renamed = [&](const Simplex& s) {
    std::vector<VertexId> vs;
    for (auto v : s.vertices()) vs.push_back(v == "a~2" ? "c" : v);
    return Simplex(vs);
  };
  CHECK(dm1.complex().cellCount() == m2.complex().cellCount());
  for (const auto& c : dm1.complex().cells()) {
    Simplex image = renamed(c);
    CHECK(m2.complex().contains(image));
    CHECK(sameLabel(dm1.label(c), m2.label(image)));
  }
}

TEST_CASE("d3_t24 has the documented boundary orbifold") {
  const OrbifoldComplex& O = entryByName("d3_t24").orbifold;
  OrbifoldComplex bd = orbifoldBoundary(O);
  TwoOrbifoldData data = analyzeTwoOrbifold(bd);
  CHECK(data.underlyingChi == 1);  // a disk
  CHECK(data.cornerReflectorOrders == std::vector<long long>{2, 3, 3});
  CHECK(data.conePointOrders.empty());
}

TEST_CASE("d3_t12 strata and chains match the worked example") {
  const OrbifoldComplex& O = entryByName("d3_t12").orbifold;
  auto strata = stratify(O);
  std::vector<long long> orders;
  for (const auto& s : strata) {
    if (s.isSingular) orders.push_back(s.label.order);
  }
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<long long>{2, 3, 3, 12});
  auto chains = completeChains(strataPoset(O, strata), true);
  CHECK(chains.size() == 3);
}

TEST_CASE("mirrors and doubles have vanishing chi in odd dimensions") {
  CHECK(*entryByName("mirror_interval").expectedChi == Rational(0));
  CHECK(*entryByName("mirror_ball").expectedChi == Rational(0));
  CHECK(*entryByName("double_interval").expectedChi == Rational(0));
  CHECK(*entryByName("double_m1").expectedChi == Rational(0));
  CHECK(*entryByName("double_d3_t12").expectedChi == Rational(0));
  CHECK(*entryByName("double_d3_t24").expectedChi == Rational(0));
  CHECK(*entryByName("mirror_triangle").expectedChi == Rational(1));  // even dim, nonzero
}

TEST_CASE("odd-dimensional entries satisfy the main theorem") {
  for (const auto& e : allEntries()) {
    if (e.orbifold.dim() % 2 == 0) continue;
    INFO("entry ", e.name);
    CHECK(checkMainTheorem(e.orbifold, e.name).pass());
    if (e.orbifold.boundaryFaces().empty()) {
      CHECK(checkSatake(e.orbifold, e.name).pass());
    }
  }
}
