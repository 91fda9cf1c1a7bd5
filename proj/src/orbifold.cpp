#include "orb/orbifold.hpp"

#include <algorithm>
#include <sstream>

namespace orb {

bool sameLabel(const LocalGroupLabel& a, const LocalGroupLabel& b) {
  return a.order == b.order && a.kind == b.kind && a.name == b.name;
}

bool labelLess(const LocalGroupLabel& a, const LocalGroupLabel& b) {
  if (a.order != b.order) return a.order < b.order;
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.name < b.name;
}

std::string kindToken(const LocalGroupLabel& l) {
  switch (l.kind) {
    case GroupKind::Trivial: return "trivial";
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::Reflection: return "reflection";
    case GroupKind::Named: return "named:" + l.name;
  }
  return "trivial";
}

GroupKind parseKindToken(const std::string& token, std::string* namedName) {
  if (token == "trivial") return GroupKind::Trivial;
  if (token == "cyclic") return GroupKind::Cyclic;
  if (token == "dihedral") return GroupKind::Dihedral;
  if (token == "reflection") return GroupKind::Reflection;
  if (token.rfind("named:", 0) == 0) {
    if (namedName) *namedName = token.substr(6);
    return GroupKind::Named;
  }
  throw Error(Errc::ParseError, "unknown label kind '" + token + "'");
}

OrbifoldComplex::OrbifoldComplex(SimplicialComplex K, std::map<Simplex, LocalGroupLabel> labels,
                                 std::set<Simplex> boundaryFaces)
    : K_(std::move(K)), boundaryFaces_(std::move(boundaryFaces)) {
  for (auto& [cell, label] : labels) {
    if (!label.trivial()) labels_.emplace(cell, std::move(label));
  }
}

const LocalGroupLabel& OrbifoldComplex::label(const Simplex& cell) const {
  static const LocalGroupLabel kTrivial{};
  auto it = labels_.find(cell);
  return it == labels_.end() ? kTrivial : it->second;
}

CellSet OrbifoldComplex::boundarySubcomplexCells() const {
  CellSet out;
  for (const auto& b : boundaryFaces_) {
    out.insert(b);
    for (auto& f : b.properFaces()) out.insert(std::move(f));
  }
  return out;
}

std::vector<Violation> validate(const OrbifoldComplex& O) {
  std::vector<Violation> out;
  if (O.empty() || O.knownValid_) return out;
  const SimplicialComplex& K = O.complex();
  const int n = K.dim();

  // Label sanity: kind/order consistency, labels attached to real cells.
  for (const auto& [cell, label] : O.nontrivialLabels()) {
    if (!K.contains(cell)) {
      out.push_back({"LabelOnMissingCell", {cell}, "labeled cell is not in the complex"});
      continue;
    }
    if (label.order < 1) {
      out.push_back({"BadLabel", {cell}, "label order must be positive"});
    }
    if ((label.kind == GroupKind::Trivial) != (label.order == 1)) {
      out.push_back({"BadLabel", {cell}, "kind=trivial iff order=1"});
    }
    if ((label.kind == GroupKind::Reflection || label.kind == GroupKind::Dihedral) &&
        label.order < 2) {
      out.push_back({"BadLabel", {cell}, "reflection/dihedral labels need order >= 2"});
    }
  }

  std::string reason;
  if (!isPurePseudomanifold(K, &reason)) {
    out.push_back({"NotPseudomanifold", {}, reason});
    return out;  // the remaining checks presume pseudomanifold structure
  }

  // Effectiveness: top cells carry trivial labels.
  for (const auto& [cell, label] : O.nontrivialLabels()) {
    if (cell.dim() == n) {
      out.push_back({"NontrivialTopCell", {cell}, "top cell labeled with order " +
                                                      std::to_string(label.order)});
    }
  }

  // Divisibility along covering pairs: label(tau).order | label(sigma).order
  // whenever sigma is a facet of tau. Transitivity extends this to all faces.
  for (const auto& cell : K.cells()) {
    if (cell.dim() == 0) continue;
    const long long upper = O.label(cell).order;
    for (const auto& f : cell.facets()) {
      const long long lower = O.label(f).order;
      if (lower % upper != 0) {
        out.push_back({"DivisibilityViolation",
                       {f, cell},
                       "order " + std::to_string(upper) + " of " + cell.str() +
                           " does not divide order " + std::to_string(lower) + " of " +
                           f.str()});
      }
    }
  }

  // Declared boundary faces must be top cells of the topological boundary;
  // undeclared topological-boundary faces must be mirrors (order >= 2).
  SimplicialComplex tb = topologicalBoundary(K);
  for (const auto& b : O.boundaryFaces()) {
    if (b.dim() != n - 1 || !tb.contains(b)) {
      out.push_back({"BoundaryFaceNotOnBoundary",
                     {b},
                     "declared boundary face is not a top cell of the topological boundary"});
    }
  }
  if (n >= 1) {
    for (const auto& b : tb.cellsOfDim(n - 1)) {
      if (!O.boundaryFaces().count(b) && O.label(b).order < 2) {
        out.push_back({"UnmarkedMirror",
                       {b},
                       "topological-boundary face has trivial label and is not declared"});
      }
    }
  }

  if (out.empty()) O.knownValid_ = true;
  return out;
}

void requireValid(const OrbifoldComplex& O, const char* who) {
  auto violations = validate(O);
  if (violations.empty()) return;
  std::ostringstream os;
  os << who << ": orbifold fails validation:";
  for (const auto& v : violations) os << " [" << v.rule << "] " << v.message << ";";
  throw Error(Errc::InvalidOrbifold, os.str());
}

Rational eulerChar(const OrbifoldComplex& O) {
  requireValid(O, "euler_char");
  Rational chi;
  for (const auto& cell : O.complex().cells()) {
    Rational term(cell.dim() % 2 == 0 ? 1 : -1, O.label(cell).order);
    chi += term;
  }
  return chi;
}

OrbifoldComplex orbifoldBoundary(const OrbifoldComplex& O) {
  requireValid(O, "orbifold_boundary");
  if (O.boundaryFaces().empty()) return OrbifoldComplex();
  std::vector<Simplex> cells(O.boundaryFaces().begin(), O.boundaryFaces().end());
  SimplicialComplex B = SimplicialComplex::fromCells(cells);
  std::map<Simplex, LocalGroupLabel> labels;
  for (const auto& c : B.cells()) {
    const LocalGroupLabel& l = O.label(c);
    if (!l.trivial()) labels.emplace(c, l);
  }
  return OrbifoldComplex(std::move(B), std::move(labels), {});
}

OrbifoldComplex doubleAlongBoundary(const OrbifoldComplex& O) {
  requireValid(O, "double");

  // Gluing identifies the boundary subcomplex pointwise, so it must be full:
  // an interior cell with every vertex on the boundary (e.g. the single edge
  // of [0,1]) would collapse the two copies onto each other. One derived pass
  // near the boundary restores fullness.
  OrbifoldComplex work = O;
  for (int round = 0; round < 2; ++round) {
    CellSet glueCells = work.boundarySubcomplexCells();
    std::set<VertexId> gv;
    for (const auto& c : glueCells) {
      for (const auto& v : c.vertices()) gv.insert(v);
    }
    bool full = true;
    for (const auto& c : work.complex().cells()) {
      if (glueCells.count(c)) continue;
      bool allOnBoundary = true;
      for (const auto& v : c.vertices()) {
        if (!gv.count(v)) {
          allOnBoundary = false;
          break;
        }
      }
      if (allOnBoundary) {
        full = false;
        break;
      }
    }
    if (full) break;
    work = transportOrbifold(work, derivedNearSubcomplex(work.complex(), glueCells));
  }

  const OrbifoldComplex& W = work;
  CellSet glue = W.boundarySubcomplexCells();
  std::set<VertexId> glueVerts;
  for (const auto& c : glue) {
    for (const auto& v : c.vertices()) glueVerts.insert(v);
  }
  auto rename = [&](const VertexId& v) { return glueVerts.count(v) ? v : v + "~2"; };
  auto renameCell = [&](const Simplex& c) {
    std::vector<VertexId> vs;
    vs.reserve(c.size());
    for (const auto& v : c.vertices()) vs.push_back(rename(v));
    return Simplex(std::move(vs));
  };

  CellSet cells;
  std::map<Simplex, LocalGroupLabel> labels;
  for (const auto& c : W.complex().cells()) {
    cells.insert(c);
    Simplex c2 = renameCell(c);
    const LocalGroupLabel& l = W.label(c);
    if (!l.trivial()) {
      labels.emplace(c, l);
      labels.emplace(c2, l);
    }
    cells.insert(std::move(c2));
  }
  return OrbifoldComplex(SimplicialComplex::fromClosedCells(std::move(cells)),
                         std::move(labels), {});
}

OrbifoldComplex mirrorManifold(const SimplicialComplex& M) {
  std::string reason;
  if (!isPurePseudomanifold(M, &reason)) throw Error(Errc::NotPseudomanifold, reason);
  SimplicialComplex tb = topologicalBoundary(M);
  std::map<Simplex, LocalGroupLabel> labels;
  for (const auto& c : tb.cells()) {
    labels.emplace(c, LocalGroupLabel{2, GroupKind::Reflection, "", {}});
  }
  return OrbifoldComplex(M, std::move(labels), {});
}

namespace {

Rational chiOfLabeledCells(const OrbifoldComplex& host, const CellSet& cells) {
  Rational chi;
  for (const auto& c : cells) {
    chi += Rational(c.dim() % 2 == 0 ? 1 : -1, host.label(c).order);
  }
  return chi;
}

}  // namespace

bool chiInclusionExclusionCheck(const OrbifoldComplex& O, const OrbifoldComplex& O1,
                                const OrbifoldComplex& O2) {
  for (const OrbifoldComplex* piece : {&O1, &O2}) {
    for (const auto& c : piece->complex().cells()) {
      if (!O.complex().contains(c)) {
        throw Error(Errc::NotSubcomplex, "piece cell " + c.str() + " not in ambient complex");
      }
      if (!sameLabel(piece->label(c), O.label(c))) {
        throw Error(Errc::NotSubcomplex, "piece label differs from ambient at " + c.str());
      }
    }
  }
  CellSet u, inter;
  const CellSet& a = O1.complex().cellSet();
  const CellSet& b = O2.complex().cellSet();
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(u, u.end()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(inter, inter.end()));
  if (u != O.complex().cellSet()) {
    throw Error(Errc::NotSubcomplex, "pieces do not cover the ambient orbifold");
  }
  Rational lhs = chiOfLabeledCells(O, u);
  Rational rhs = chiOfLabeledCells(O, a) + chiOfLabeledCells(O, b) - chiOfLabeledCells(O, inter);
  return lhs == rhs;
}

OrbifoldComplex transportOrbifold(const OrbifoldComplex& O, const Subdivision& sub) {
  const int n = O.dim();
  std::map<Simplex, LocalGroupLabel> labels;
  std::set<Simplex> bdry;
  for (const auto& c : sub.complex.cells()) {
    auto it = sub.carrier.find(c);
    if (it == sub.carrier.end()) {
      throw Error(Errc::Internal, "subdivision carrier missing cell " + c.str());
    }
    const LocalGroupLabel& l = O.label(it->second);
    if (!l.trivial()) labels.emplace(c, l);
    if (c.dim() == n - 1 && O.boundaryFaces().count(it->second)) bdry.insert(c);
  }
  return OrbifoldComplex(sub.complex, std::move(labels), std::move(bdry));
}

OrbifoldComplex subdivideOrbifold(const OrbifoldComplex& O) {
  requireValid(O, "subdivide_orbifold");
  if (O.empty()) return O;
  return transportOrbifold(O, barycentricSubdivision(O.complex()));
}

OrbifoldComplex restrictToSubcomplex(const OrbifoldComplex& O, const CellSet& cells,
                                     const CellSet& extraBoundary) {
  if (cells.empty()) return OrbifoldComplex();
  for (const auto& c : cells) {
    if (!O.complex().contains(c)) {
      throw Error(Errc::NotSubcomplex, "cell " + c.str() + " not in ambient complex");
    }
  }
  SimplicialComplex K = SimplicialComplex::fromClosedCells(cells);
  const int d = K.dim();
  std::map<Simplex, LocalGroupLabel> labels;
  for (const auto& c : K.cells()) {
    const LocalGroupLabel& l = O.label(c);
    if (!l.trivial()) labels.emplace(c, l);
  }
  std::set<Simplex> bdry;
  for (const auto& [face, cof] : K.cofacetsOfDim(d - 1)) {
    if (cof.size() != 1) continue;
    if (O.boundaryFaces().count(face) || extraBoundary.count(face)) bdry.insert(face);
  }
  return OrbifoldComplex(std::move(K), std::move(labels), std::move(bdry));
}

}  // namespace orb
