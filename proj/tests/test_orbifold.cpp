#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orb/orbifold.hpp"

using namespace orb;

namespace {

LocalGroupLabel cyclic(long long n) { return {n, GroupKind::Cyclic, "", {}}; }
LocalGroupLabel reflection() { return {2, GroupKind::Reflection, "", {}}; }

// [0,1] as a single edge with both endpoints declared boundary.
OrbifoldComplex interval() {
  auto K = SimplicialComplex::fromMaximalCells({{"a", "b"}});
  return OrbifoldComplex(K, {}, {Simplex({"a"}), Simplex({"b"})});
}

// Interval with a mirror at `a` and true boundary at `b`.
OrbifoldComplex m1() {
  auto K = SimplicialComplex::fromMaximalCells({{"a", "b"}});
  return OrbifoldComplex(K, {{Simplex({"a"}), reflection()}}, {Simplex({"b"})});
}

// Interval with mirrors at both ends.
OrbifoldComplex m2() {
  auto K = SimplicialComplex::fromMaximalCells({{"a", "b"}});
  return OrbifoldComplex(K, {{Simplex({"a"}), reflection()}, {Simplex({"b"}), reflection()}},
                         {});
}

OrbifoldComplex s1() {
  auto K = SimplicialComplex::fromMaximalCells({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  return OrbifoldComplex(K, {}, {});
}

// n-teardrop: suspension of a square, north pole labeled Z_n.
OrbifoldComplex teardrop(long long n) {
  std::vector<std::vector<VertexId>> tris;
  std::vector<VertexId> eq{"e0", "e1", "e2", "e3"};
  for (int i = 0; i < 4; ++i) {
    tris.push_back({"N", eq[i], eq[(i + 1) % 4]});
    tris.push_back({"S", eq[i], eq[(i + 1) % 4]});
  }
  auto K = SimplicialComplex::fromMaximalCells(tris);
  return OrbifoldComplex(K, {{Simplex({"N"}), cyclic(n)}}, {});
}

}  // namespace

TEST_CASE("dim-1 table of euler characteristics") {
  CHECK(eulerChar(interval()) == Rational(1));
  CHECK(eulerChar(s1()) == Rational(0));
  CHECK(eulerChar(m1()) == Rational(1, 2));
  CHECK(eulerChar(m2()) == Rational(0));

  CHECK(eulerChar(orbifoldBoundary(interval())) == Rational(2));
  CHECK(eulerChar(orbifoldBoundary(s1())) == Rational(0));
  CHECK(eulerChar(orbifoldBoundary(m1())) == Rational(1));
  CHECK(eulerChar(orbifoldBoundary(m2())) == Rational(0));
}

TEST_CASE("teardrop euler characteristic is 1 + 1/n") {
  CHECK(eulerChar(teardrop(3)) == Rational(4, 3));
  for (long long n = 2; n <= 12; ++n) {
    CHECK(eulerChar(teardrop(n)) == Rational(1) + Rational(1, n));
  }
}

TEST_CASE("validate flags the documented violations") {
  CHECK(validate(teardrop(3)).empty());
  CHECK(validate(interval()).empty());
  CHECK(validate(m2()).empty());

  // Edge labeled order 3 with a vertex labeled order 2: 3 does not divide 2.
  {
    auto K = SimplicialComplex::fromMaximalCells({{"a", "b"}});
    OrbifoldComplex bad(K, {{Simplex({"a", "b"}), cyclic(3)}, {Simplex({"a"}), cyclic(2)}},
                        {Simplex({"a"}), Simplex({"b"})});
    auto v = validate(bad);
    bool divisibility = false, topcell = false;
    for (const auto& viol : v) {
      if (viol.rule == "DivisibilityViolation") divisibility = true;
      if (viol.rule == "NontrivialTopCell") topcell = true;
    }
    CHECK(divisibility);
    CHECK(topcell);  // the edge is the top cell here
  }

  // Boundary edge with trivial label, not declared: unmarked mirror.
  {
    auto K = SimplicialComplex::fromMaximalCells({{"a", "b", "c"}});
    OrbifoldComplex bad(K, {}, {});
    auto v = validate(bad);
    REQUIRE(!v.empty());
    bool unmarked = false;
    for (const auto& viol : v) {
      if (viol.rule == "UnmarkedMirror") unmarked = true;
    }
    CHECK(unmarked);
  }

  // One-label corruption of a valid orbifold always yields a violation.
  {
    OrbifoldComplex good = teardrop(3);
    auto labels = good.nontrivialLabels();
    labels[Simplex({"e0", "e1"})] = cyclic(5);  // singular edge inside the sphere
    OrbifoldComplex bad(good.complex(), labels, {});
    CHECK(!validate(bad).empty());
  }

  CHECK_THROWS_AS(eulerChar(OrbifoldComplex(
                      SimplicialComplex::fromMaximalCells({{"a", "b", "c"}}), {}, {})),
                  Error);
}

TEST_CASE("orbifold boundary") {
  OrbifoldComplex b = orbifoldBoundary(m1());
  CHECK(b.complex().cellCount() == 1);
  CHECK(eulerChar(b) == Rational(1));

  CHECK(orbifoldBoundary(teardrop(3)).empty());
  for (const OrbifoldComplex& O : {interval(), m1(), m2(), teardrop(4)}) {
    CHECK(orbifoldBoundary(orbifoldBoundary(O)).empty());
  }
}

TEST_CASE("doubling along the boundary") {
  // The interval's boundary subcomplex is not full (the edge spans it), so
  // doubling refines first; the result is a closed circle either way.
  OrbifoldComplex circle = doubleAlongBoundary(interval());
  CHECK(eulerChar(circle) == Rational(0));
  CHECK(circle.boundaryFaces().empty());
  CHECK(topologicalBoundary(circle.complex()).empty());
  CHECK(circle.complex().cellsOfDim(1).size() == circle.complex().cellsOfDim(0).size());

  // double(M1) is M2 up to the canonical copy renaming a -> a~2.
  OrbifoldComplex dm1 = doubleAlongBoundary(m1());
  CHECK(eulerChar(dm1) == Rational(0));
  CHECK(validate(dm1).empty());
  CHECK(dm1.complex().contains(Simplex({"a", "b"})));
  CHECK(dm1.complex().contains(Simplex({"a~2", "b"})));
  CHECK(sameLabel(dm1.label(Simplex({"a"})), reflection()));
  CHECK(sameLabel(dm1.label(Simplex({"a~2"})), reflection()));
  CHECK(dm1.label(Simplex({"b"})).trivial());

  // chi(2O) = 2 chi(O) - chi(dO) on everything with boundary.
  for (const OrbifoldComplex& O : {interval(), m1()}) {
    Rational lhs = eulerChar(doubleAlongBoundary(O));
    CHECK(lhs == Rational(2) * eulerChar(O) - eulerChar(orbifoldBoundary(O)));
  }
}

TEST_CASE("mirror of a manifold") {
  // mirror([0,1]) = M2.
  OrbifoldComplex mi = mirrorManifold(SimplicialComplex::fromMaximalCells({{"a", "b"}}));
  CHECK(eulerChar(mi) == Rational(0));
  CHECK(sameLabel(mi.label(Simplex({"a"})), reflection()));

  // mirror(solid triangle): chi = chi(D^2) - chi(S^1)/2 = 1.
  OrbifoldComplex md = mirrorManifold(SimplicialComplex::fromMaximalCells({{"a", "b", "c"}}));
  CHECK(validate(md).empty());
  CHECK(eulerChar(md) == Rational(1));

  // mirror(ball): chi = 1 - chi(S^2)/2 = 0.
  SimplicialComplex ball = coneOver(
      SimplicialComplex::fromMaximalCells(
          {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}}),
      "O");
  OrbifoldComplex mb = mirrorManifold(ball);
  CHECK(eulerChar(mb) == Rational(0));

  // Identity chi(mM) = chi(M) - chi(dM)/2, spelled out.
  Rational chiM(eulerCharTop(ball));
  Rational chiBd(eulerCharTop(topologicalBoundary(ball)));
  CHECK(eulerChar(mb) == chiM - Rational(1, 2) * chiBd);

  CHECK_THROWS_AS(mirrorManifold(SimplicialComplex::fromMaximalCells(
                      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}})),
                  Error);
}

TEST_CASE("inclusion-exclusion check") {
  OrbifoldComplex O = interval();
  // Split [a,b] is impossible without a subdivision; use O1 = O2 = O.
  CHECK(chiInclusionExclusionCheck(O, O, O));

  // Split the subdivided interval at its midpoint.
  OrbifoldComplex S = subdivideOrbifold(O);
  CellSet left{Simplex({"a"}), Simplex({"(a+b)"}), Simplex({"a", "(a+b)"})};
  CellSet right{Simplex({"b"}), Simplex({"(a+b)"}), Simplex({"(a+b)", "b"})};
  OrbifoldComplex O1 = restrictToSubcomplex(S, left, {Simplex({"(a+b)"})});
  OrbifoldComplex O2 = restrictToSubcomplex(S, right, {Simplex({"(a+b)"})});
  CHECK(chiInclusionExclusionCheck(S, O1, O2));

  // A piece outside the ambient complex is rejected.
  CHECK_THROWS_AS(chiInclusionExclusionCheck(O, O, s1()), Error);
}

TEST_CASE("subdivision of orbifolds keeps chi and labels valid") {
  for (const OrbifoldComplex& O : {interval(), m1(), m2(), s1(), teardrop(3), teardrop(7)}) {
    OrbifoldComplex S = subdivideOrbifold(O);
    CHECK(validate(S).empty());
    CHECK(eulerChar(S) == eulerChar(O));
    OrbifoldComplex S2 = subdivideOrbifold(S);
    CHECK(eulerChar(S2) == eulerChar(O));
  }

  // Boundary faces subdivide into boundary faces.
  OrbifoldComplex Si = subdivideOrbifold(interval());
  CHECK(Si.boundaryFaces().count(Simplex({"a"})) == 1);
  CHECK(Si.boundaryFaces().count(Simplex({"b"})) == 1);
}
