#include "orb/corpus.hpp"

#include <algorithm>

namespace orb {

namespace {

LocalGroupLabel cyclic(long long n) { return {n, GroupKind::Cyclic, "", {}}; }
LocalGroupLabel reflection() { return {2, GroupKind::Reflection, "", {}}; }

std::string gonName(int i) {
  return "e" + std::string(i < 10 ? "0" : "") + std::to_string(i);
}

SimplicialComplex tetraBoundary() {
  return SimplicialComplex::fromMaximalCells(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

SimplicialComplex bipyramidSphere(int gon) {
  std::vector<std::vector<VertexId>> tris;
  for (int i = 0; i < gon; ++i) {
    tris.push_back({"N", gonName(i), gonName((i + 1) % gon)});
    tris.push_back({"S", gonName(i), gonName((i + 1) % gon)});
  }
  return SimplicialComplex::fromMaximalCells(tris);
}

std::set<Simplex> topCellsOf(const SimplicialComplex& K) {
  std::set<Simplex> out;
  for (const auto& c : K.cellsOfDim(K.dim())) out.insert(c);
  return out;
}

// Extends tetra-vertex permutations over the barycentric sphere vertices.
Permutation liftOverBarycenters(const Permutation& g, const SimplicialComplex& base) {
  std::map<VertexId, VertexId> mapping;
  for (const auto& c : base.cells()) {
    mapping[encodeCellName(c)] = encodeCellName(g.apply(c));
  }
  return Permutation::fromMapping(mapping);
}

CorpusAction makeRotationAction(const std::string& name, int gon, int shift) {
  SimplicialComplex ball = bipyramidBallComplex(gon);
  std::map<VertexId, VertexId> m;
  for (int i = 0; i < gon; ++i) m[gonName(i)] = gonName((i + shift) % gon);
  SimplicialAction A{closeGroup({Permutation::fromMapping(m)}, ball.vertexList()), ball};
  return {name, std::move(A), topCellsOf(topologicalBoundary(ball))};
}

CorpusAction makeDihedralAction(const std::string& name, int gon) {
  SimplicialComplex ball = bipyramidBallComplex(gon);
  std::map<VertexId, VertexId> rot;
  for (int i = 0; i < gon; ++i) rot[gonName(i)] = gonName((i + gon / 2) % gon);
  std::map<VertexId, VertexId> flip{{"N", "S"}, {"S", "N"}};
  for (int i = 0; i < gon; ++i) flip[gonName(i)] = gonName((gon - i) % gon);
  SimplicialAction A{closeGroup({Permutation::fromMapping(rot), Permutation::fromMapping(flip)},
                                ball.vertexList()),
                     ball};
  std::set<Simplex> bdry = topCellsOf(topologicalBoundary(ball));
  RegularizeResult reg = regularize(A);
  return {name, reg.action, transportCells(bdry, reg.carrier, reg.action.complex, 2)};
}

CorpusAction makeTetrahedralAction(const std::string& name,
                                   const std::vector<std::vector<VertexId>>& cycles) {
  SimplicialComplex base = tetraBoundary();
  SimplicialComplex ball = tetraBallComplex();
  std::vector<Permutation> gens;
  for (const auto& cyc : cycles) {
    gens.push_back(liftOverBarycenters(Permutation::fromCycles({cyc}), base));
  }
  SimplicialAction A{closeGroup(gens, ball.vertexList()), ball};
  std::set<Simplex> bdry = topCellsOf(topologicalBoundary(ball));
  RegularizeResult reg = regularize(A);
  return {name, reg.action, transportCells(bdry, reg.carrier, reg.action.complex, 2)};
}

CorpusEntry quotientEntry(const CorpusAction& act, const std::string& sourceNote) {
  CorpusEntry e;
  e.name = act.name;
  e.orbifold = quotient(act.action, act.boundaryFaces);
  e.provenance = "quotient(" + act.name + ")";
  e.expectedChi = Rational(1, act.action.group.order());
  e.chiSource = sourceNote;
  return e;
}

}  // namespace

SimplicialComplex intervalComplex() {
  return SimplicialComplex::fromMaximalCells({{"a", "b"}});
}

SimplicialComplex solidTriangleComplex() {
  return SimplicialComplex::fromMaximalCells({{"a", "b", "c"}});
}

SimplicialComplex tetraBallComplex() {
  return coneOver(barycentricSubdivision(tetraBoundary()).complex, "O");
}

SimplicialComplex bipyramidBallComplex(int gon) {
  return coneOver(bipyramidSphere(gon), "C");
}

std::vector<CorpusEntry> buildDim1() {
  std::vector<CorpusEntry> out;

  SimplicialComplex edge = intervalComplex();
  out.push_back({"interval", OrbifoldComplex(edge, {}, {Simplex({"a"}), Simplex({"b"})}),
                 "direct-labeled", Rational(1), "dim-1 table"});

  SimplicialComplex circle =
      SimplicialComplex::fromMaximalCells({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  out.push_back({"s1", OrbifoldComplex(circle, {}, {}), "direct-labeled", Rational(0),
                 "dim-1 table"});

  out.push_back({"m1",
                 OrbifoldComplex(edge, {{Simplex({"a"}), reflection()}}, {Simplex({"b"})}),
                 "direct-labeled", Rational(1, 2), "dim-1 table"});

  // Two edges so that double(m1) matches cell-for-cell.
  SimplicialComplex path = SimplicialComplex::fromMaximalCells({{"a", "b"}, {"b", "c"}});
  out.push_back({"m2",
                 OrbifoldComplex(
                     path, {{Simplex({"a"}), reflection()}, {Simplex({"c"}), reflection()}}, {}),
                 "direct-labeled", Rational(0), "dim-1 table"});
  return out;
}

std::vector<CorpusEntry> buildBad2(long long n, long long m, long long r) {
  if (n < 2 || m < 2 || r < 2) {
    throw Error(Errc::OrderTooSmall, "cone orders must be at least 2");
  }
  SimplicialComplex sphere = bipyramidSphere(4);
  std::vector<CorpusEntry> out;

  out.push_back({"teardrop" + std::to_string(n),
                 OrbifoldComplex(sphere, {{Simplex({"N"}), cyclic(n)}}, {}), "direct-labeled",
                 Rational(1) + Rational(1, n), "teardrop formula 1 + 1/n"});

  out.push_back({"spindle" + std::to_string(n) + "_" + std::to_string(m),
                 OrbifoldComplex(
                     sphere, {{Simplex({"N"}), cyclic(n)}, {Simplex({"S"}), cyclic(m)}}, {}),
                 "direct-labeled", Rational(1, n) + Rational(1, m),
                 "closed formula 1/n + 1/m"});

  out.push_back(
      {"turnover" + std::to_string(n) + "_" + std::to_string(m) + "_" + std::to_string(r),
       OrbifoldComplex(sphere,
                       {{Simplex({"N"}), cyclic(n)},
                        {Simplex({"S"}), cyclic(m)},
                        {Simplex({"e00"}), cyclic(r)}},
                       {}),
       "direct-labeled",
       Rational(2) - (Rational(1) - Rational(1, n)) - (Rational(1) - Rational(1, m)) -
           (Rational(1) - Rational(1, r)),
       "closed formula 2 - sum(1 - 1/k)"});
  return out;
}

const std::vector<CorpusAction>& corpusActions() {
  static const std::vector<CorpusAction> actions = [] {
    std::vector<CorpusAction> out;
    out.push_back(makeRotationAction("d3_z2", 6, 3));
    out.push_back(makeRotationAction("d3_z3", 9, 3));
    out.push_back(makeRotationAction("d3_z6", 18, 3));
    out.push_back(makeDihedralAction("d3_d2", 8));
    out.push_back(makeTetrahedralAction("d3_t12", {{"a", "b", "c"}, {"b", "c", "d"}}));
    out.push_back(makeTetrahedralAction("d3_t24", {{"a", "b"}, {"a", "b", "c", "d"}}));
    return out;
  }();
  return actions;
}

std::vector<CorpusEntry> buildDiskQuotients() {
  std::vector<CorpusEntry> out;
  for (const auto& act : corpusActions()) {
    out.push_back(quotientEntry(act, "multiplicativity chi(M) = |G| chi(M/G)"));
  }
  return out;
}

std::vector<CorpusEntry> buildMirrorsAndDoubles(const std::vector<CorpusEntry>& entries) {
  std::vector<CorpusEntry> out;

  out.push_back({"mirror_interval", mirrorManifold(intervalComplex()), "mirror(interval)",
                 Rational(0), "chi(M) - chi(dM)/2"});
  out.push_back({"mirror_triangle", mirrorManifold(solidTriangleComplex()),
                 "mirror(solid triangle)", Rational(1), "chi(M) - chi(dM)/2"});
  out.push_back({"mirror_ball", mirrorManifold(tetraBallComplex()), "mirror(tetra ball)",
                 Rational(0), "chi(M) - chi(dM)/2"});

  for (const auto& e : entries) {
    if (e.orbifold.boundaryFaces().empty()) continue;
    CorpusEntry d;
    d.name = "double_" + e.name;
    d.orbifold = doubleAlongBoundary(e.orbifold);
    d.provenance = "double(" + e.name + ")";
    if (e.expectedChi) {
      Rational chiBd = e.orbifold.boundaryFaces().empty()
                           ? Rational(0)
                           : eulerChar(orbifoldBoundary(e.orbifold));
      d.expectedChi = Rational(2) * *e.expectedChi - chiBd;
      d.chiSource = "2 chi(O) - chi(dO)";
    }
    out.push_back(std::move(d));
  }
  return out;
}

const std::vector<CorpusEntry>& allEntries() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out = buildDim1();
    for (auto& e : buildBad2(2, 2, 2)) out.push_back(std::move(e));
    {
      auto more = buildBad2(3, 2, 3);
      out.push_back(std::move(more[0]));  // teardrop3
    }
    {
      auto more = buildBad2(2, 3, 5);
      out.push_back(std::move(more[1]));  // spindle2_3
      out.push_back(std::move(more[2]));  // turnover2_3_5
    }
    {
      auto more = buildBad2(2, 3, 7);
      out.push_back(std::move(more[2]));  // turnover2_3_7
    }
    {
      auto more = buildBad2(3, 3, 3);
      out.push_back(std::move(more[2]));  // turnover3_3_3
    }
    for (auto& e : buildDiskQuotients()) out.push_back(std::move(e));

    // Doubles of the boundary-carrying entries built so far, plus mirrors.
    std::vector<CorpusEntry> withBoundary;
    for (const auto& e : out) {
      if (e.name == "interval" || e.name == "m1" || e.name == "d3_t12" || e.name == "d3_t24") {
        withBoundary.push_back(e);
      }
    }
    for (auto& e : buildMirrorsAndDoubles(withBoundary)) out.push_back(std::move(e));
    return out;
  }();
  return entries;
}

const CorpusEntry& entryByName(const std::string& name) {
  for (const auto& e : allEntries()) {
    if (e.name == name) return e;
  }
  throw Error(Errc::UnknownEntry, "no corpus entry named '" + name + "'");
}

}  // namespace orb
