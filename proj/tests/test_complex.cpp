#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "orb/complex.hpp"
#include "orb/rational.hpp"

using namespace orb;

namespace {

SimplicialComplex triangle() { return SimplicialComplex::fromMaximalCells({{"a", "b", "c"}}); }

SimplicialComplex tetraBoundary() {
  return SimplicialComplex::fromMaximalCells(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

// Independent oracle: the face closure of a family of vertex sets, computed
// by plain subset enumeration over std::set<std::set<...>>.
std::set<std::set<VertexId>> bruteForceClosure(const std::vector<std::vector<VertexId>>& maximal) {
  std::set<std::set<VertexId>> cells;
  for (const auto& m : maximal) {
    std::vector<VertexId> vs(m.begin(), m.end());
    const std::size_t n = vs.size();
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
      std::set<VertexId> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1ull << i)) sub.insert(vs[i]);
      }
      cells.insert(sub);
    }
  }
  return cells;
}

// Independent oracle for barycentric cell counts: number of strictly
// increasing chains of length k+1 in the face poset, by direct enumeration.
long long countChains(const SimplicialComplex& K, int length) {
  std::vector<Simplex> cells = K.cells();
  long long total = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t lastIdx, int remaining) {
    if (remaining == 0) {
      ++total;
      return;
    }
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (cells[j].dim() > cells[lastIdx].dim() && cells[j].hasFace(cells[lastIdx])) {
        rec(j, remaining - 1);
      }
    }
  };
  for (std::size_t i = 0; i < cells.size(); ++i) rec(i, length - 1);
  return total;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and prints p/q") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(4, 3).str() == "4/3");
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(3) == Rational(1, 6));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("build_complex face closure") {
  CHECK(triangle().cellCount() == 7);
  CHECK(SimplicialComplex::fromMaximalCells({{"a"}}).cellCount() == 1);

  SimplicialComplex K = tetraBoundary();
  auto oracle = bruteForceClosure(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  CHECK(K.cellCount() == oracle.size());
  CHECK(K.cellCount() == 14);
  for (const auto& cell : K.cells()) {
    std::set<VertexId> vs(cell.vertices().begin(), cell.vertices().end());
    CHECK(oracle.count(vs) == 1);
  }

  CHECK_THROWS_AS(SimplicialComplex::fromMaximalCells({{"a", "a", "b"}}), Error);
  // Idempotent on already-closed input.
  SimplicialComplex again = SimplicialComplex::fromCells(K.cells());
  CHECK(again.cellSet() == K.cellSet());
}

TEST_CASE("euler_char_top on standard complexes") {
  CHECK(eulerCharTop(tetraBoundary()) == 2);
  SimplicialComplex circle =
      SimplicialComplex::fromMaximalCells({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(eulerCharTop(circle) == 0);
  CHECK(eulerCharTop(triangle()) == 1);
  CHECK(eulerCharTop(SimplicialComplex()) == 0);
}

TEST_CASE("topological_boundary") {
  SimplicialComplex tri = triangle();
  SimplicialComplex b = topologicalBoundary(tri);
  CHECK(b.cellCount() == 6);  // 3 edges + 3 vertices
  CHECK(b.dim() == 1);

  CHECK(topologicalBoundary(tetraBoundary()).empty());

  SimplicialComplex interval = SimplicialComplex::fromMaximalCells({{"a", "b"}, {"b", "c"}});
  SimplicialComplex ib = topologicalBoundary(interval);
  CHECK(ib.cellCount() == 2);
  CHECK(ib.contains(Simplex({"a"})));
  CHECK(ib.contains(Simplex({"c"})));

  // Three triangles sharing an edge: not a pseudomanifold.
  SimplicialComplex bad = SimplicialComplex::fromMaximalCells(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}});
  CHECK_THROWS_AS(topologicalBoundary(bad), Error);
  // Mixed dimension: not pure.
  SimplicialComplex impure =
      SimplicialComplex::fromMaximalCells({{"a", "b", "c"}, {"d", "e"}});
  CHECK_THROWS_AS(topologicalBoundary(impure), Error);

  // Boundary of boundary is empty.
  CHECK(topologicalBoundary(topologicalBoundary(triangle())).empty());
}

TEST_CASE("barycentric subdivision cells are flags") {
  SimplicialComplex edge = SimplicialComplex::fromMaximalCells({{"a", "b"}});
  Subdivision sd = barycentricSubdivision(edge);
  CHECK(sd.complex.cellsOfDim(0).size() == 3);
  CHECK(sd.complex.cellsOfDim(1).size() == 2);
  CHECK(sd.complex.contains(Simplex({"a", "(a+b)"})));

  // Solid triangle: 7 vertices, 12 edges, 6 triangles (oracle: chain counts).
  SimplicialComplex tri = triangle();
  Subdivision sdt = barycentricSubdivision(tri);
  CHECK((long long)sdt.complex.cellsOfDim(0).size() == countChains(tri, 1));
  CHECK((long long)sdt.complex.cellsOfDim(1).size() == countChains(tri, 2));
  CHECK((long long)sdt.complex.cellsOfDim(2).size() == countChains(tri, 3));
  CHECK(sdt.complex.cellsOfDim(0).size() == 7);
  CHECK(sdt.complex.cellsOfDim(1).size() == 12);
  CHECK(sdt.complex.cellsOfDim(2).size() == 6);

  // chi is preserved.
  CHECK(eulerCharTop(barycentricSubdivision(tetraBoundary()).complex) == 2);

  // Carrier maps every flag to its maximal element and is onto the old cells.
  std::set<Simplex> image;
  for (const auto& [flag, old] : sdt.carrier) {
    image.insert(old);
    CHECK(sdt.complex.contains(flag));
    // The vertex encoding the carrier must be a vertex of the flag.
    CHECK(flag.hasVertex(encodeCellName(old)));
  }
  CHECK(image.size() == tri.cellCount());
}

TEST_CASE("iterated subdivision keeps chi on the corpus of small complexes") {
  for (const SimplicialComplex& K :
       {triangle(), tetraBoundary(),
        SimplicialComplex::fromMaximalCells({{"a", "b"}, {"b", "c"}, {"a", "c"}})}) {
    long long chi = eulerCharTop(K);
    Subdivision s1 = barycentricSubdivision(K);
    CHECK(eulerCharTop(s1.complex) == chi);
    Subdivision s2 = barycentricSubdivision(s1.complex);
    CHECK(eulerCharTop(s2.complex) == chi);
  }
}

TEST_CASE("derived subdivision near a subcomplex makes it full and keeps chi") {
  SimplicialComplex K = triangle();
  CellSet L{Simplex({"a"}), Simplex({"b"})};
  Subdivision d1 = derivedNearSubcomplex(K, L);
  CHECK(eulerCharTop(d1.complex) == 1);
  // Fullness: the edge {a,b} spanned inside L must be gone.
  CHECK(!d1.complex.contains(Simplex({"a", "b"})));
  CHECK(d1.complex.contains(Simplex({"a"})));
  // Carrier covers every cell.
  for (const auto& c : d1.complex.cells()) CHECK(d1.carrier.count(c) == 1);

  // A second pass still preserves chi and the untouched far side.
  Subdivision d2 = derivedNearSubcomplex(d1.complex, L);
  CHECK(eulerCharTop(d2.complex) == 1);
}

TEST_CASE("connected components under face adjacency") {
  SimplicialComplex two =
      SimplicialComplex::fromMaximalCells({{"a", "b", "c"}, {"x", "y", "z"}});
  auto comps = connectedComponents(two, two.cells());
  CHECK(comps.size() == 2);

  SimplicialComplex tri = triangle();
  CHECK(connectedComponents(tri, tri.cells()).size() == 1);

  // Vertices only, no edges in the subset: three singletons.
  SimplicialComplex circle =
      SimplicialComplex::fromMaximalCells({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto vonly = connectedComponents(circle, circle.cellsOfDim(0));
  CHECK(vonly.size() == 3);
}

TEST_CASE("cone over a complex") {
  SimplicialComplex ball = coneOver(tetraBoundary(), "O");
  CHECK(ball.dim() == 3);
  CHECK(eulerCharTop(ball) == 1);
  CHECK(topologicalBoundary(ball).cellSet() == tetraBoundary().cellSet());
}
