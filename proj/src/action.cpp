#include "orb/action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace orb {

Permutation Permutation::fromMapping(const std::map<VertexId, VertexId>& mapping) {
  Permutation p;
  std::set<VertexId> images;
  for (const auto& [from, to] : mapping) {
    if (!images.insert(to).second) {
      throw Error(Errc::NotBijection, "image '" + to + "' repeats");
    }
    if (from != to) p.moved_.emplace(from, to);
  }
  // Moved vertices must map onto moved vertices (no element may leave the
  // support, or some preimage would be missing).
  for (const auto& [from, to] : p.moved_) {
    (void)from;
    if (!p.moved_.count(to)) {
      throw Error(Errc::NotBijection, "'" + to + "' has no image of its own");
    }
  }
  return p;
}

Permutation Permutation::fromCycles(const std::vector<std::vector<VertexId>>& cycles) {
  std::map<VertexId, VertexId> mapping;
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const VertexId& from = cyc[i];
      const VertexId& to = cyc[(i + 1) % cyc.size()];
      if (mapping.count(from)) {
        throw Error(Errc::NotBijection, "vertex '" + from + "' appears in two cycles");
      }
      mapping.emplace(from, to);
    }
  }
  return fromMapping(mapping);
}

VertexId Permutation::apply(const VertexId& v) const {
  auto it = moved_.find(v);
  return it == moved_.end() ? v : it->second;
}

Simplex Permutation::apply(const Simplex& s) const {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (const auto& v : s.vertices()) out.push_back(apply(v));
  return Simplex(std::move(out));
}

Permutation Permutation::then(const Permutation& b) const {
  std::map<VertexId, VertexId> mapping;
  for (const auto& [from, mid] : moved_) mapping[from] = b.apply(mid);
  for (const auto& [from, to] : b.moved_) {
    if (!mapping.count(from)) mapping[from] = to;
  }
  Permutation p;
  for (const auto& [from, to] : mapping) {
    if (from != to) p.moved_.emplace(from, to);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  for (const auto& [from, to] : moved_) p.moved_.emplace(to, from);
  return p;
}

long long Permutation::order() const {
  long long n = 1;
  Permutation acc = *this;
  while (!acc.isIdentity()) {
    acc = acc.then(*this);
    ++n;
  }
  return n;
}

std::string Permutation::cycleNotation() const {
  if (moved_.empty()) return "()";
  std::set<VertexId> seen;
  std::ostringstream os;
  for (const auto& [start, ignored] : moved_) {
    (void)ignored;
    if (seen.count(start)) continue;
    os << "(";
    VertexId v = start;
    bool first = true;
    do {
      seen.insert(v);
      os << (first ? "" : " ") << v;
      first = false;
      v = apply(v);
    } while (v != start);
    os << ")";
  }
  return os.str();
}

PermutationGroup::PermutationGroup() { elements_.push_back(Permutation()); }

PermutationGroup PermutationGroup::fromElements(std::vector<Permutation> elements,
                                                std::vector<Permutation> generators) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermutationGroup g;
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generators);
  bool hasId = false;
  for (const auto& e : g.elements_) hasId |= e.isIdentity();
  if (!hasId) throw Error(Errc::Internal, "group element set lacks the identity");
  return g;
}

PermutationGroup closeGroup(const std::vector<Permutation>& generators,
                            const std::vector<VertexId>& domain) {
  std::set<VertexId> dom(domain.begin(), domain.end());
  for (const auto& g : generators) {
    for (const auto& [from, to] : g.mapping()) {
      if (!dom.count(from) || !dom.count(to)) {
        throw Error(Errc::NotBijection,
                    "generator moves '" + from + "' -> '" + to + "' outside the vertex set");
      }
    }
  }
  std::set<Permutation> elements;
  std::deque<Permutation> frontier;
  elements.insert(Permutation());
  frontier.push_back(Permutation());
  while (!frontier.empty()) {
    Permutation cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = cur.then(g);
      if (elements.insert(next).second) frontier.push_back(next);
    }
  }
  PermutationGroup out;
  out.elements_.assign(elements.begin(), elements.end());
  out.generators_ = generators;
  return out;
}

void requireSimplicial(const SimplicialAction& A) {
  std::set<VertexId> verts;
  for (const auto& v : A.complex.vertexList()) verts.insert(v);
  for (const auto& g : A.group.generators()) {
    for (const auto& [from, to] : g.mapping()) {
      if (!verts.count(from) || !verts.count(to)) {
        throw Error(Errc::NotBijection, "generator moves vertices outside the complex");
      }
    }
  }
  // Generators mapping cells to cells suffices: products then do as well.
  for (const auto& g : A.group.generators()) {
    for (const auto& c : A.complex.cells()) {
      Simplex image = g.apply(c);
      if (!A.complex.contains(image)) {
        throw Error(Errc::NotBijection,
                    "image " + image.str() + " of cell " + c.str() + " is not a cell");
      }
    }
  }
}

namespace {

// Orbit id per vertex, ids ordered by least orbit member.
std::map<VertexId, int> vertexOrbits(const SimplicialAction& A) {
  std::map<VertexId, int> orbit;
  int next = 0;
  for (const auto& v : A.complex.vertexList()) {
    if (orbit.count(v)) continue;
    for (const auto& g : A.group.elements()) orbit.emplace(g.apply(v), next);
    ++next;
  }
  return orbit;
}

}  // namespace

bool isRegular(const SimplicialAction& A) {
  requireSimplicial(A);

  // (1) setwise fix implies pointwise fix;
  for (const auto& g : A.group.elements()) {
    if (g.isIdentity()) continue;
    for (const auto& c : A.complex.cells()) {
      if (g.apply(c) == c) {
        for (const auto& v : c.vertices()) {
          if (g.apply(v) != v) return false;
        }
      }
    }
  }

  // (2) no cell has two vertices in one orbit;
  std::map<VertexId, int> orbit = vertexOrbits(A);
  std::unordered_map<std::string, Simplex> byOrbitKey;
  for (const auto& c : A.complex.cells()) {
    std::vector<int> ids;
    for (const auto& v : c.vertices()) ids.push_back(orbit.at(v));
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;

    // (3) cells with equal vertex-orbit sets lie in one cell orbit: keep the
    // first cell seen per orbit key and require the rest to be images of it.
    std::string key = std::to_string(c.dim());
    for (int id : ids) key += "," + std::to_string(id);
    auto [it, inserted] = byOrbitKey.emplace(key, c);
    if (!inserted) {
      bool sameOrbit = false;
      for (const auto& g : A.group.elements()) {
        if (g.apply(it->second) == c) {
          sameOrbit = true;
          break;
        }
      }
      if (!sameOrbit) return false;
    }
  }
  return true;
}

namespace {

// Extends a vertex permutation over the flag vertices of the subdivision.
Permutation extendOverSubdivision(const Permutation& g, const SimplicialComplex& K) {
  std::map<VertexId, VertexId> mapping;
  for (const auto& c : K.cells()) {
    mapping[encodeCellName(c)] = encodeCellName(g.apply(c));
  }
  return Permutation::fromMapping(mapping);
}

}  // namespace

RegularizeResult regularize(const SimplicialAction& A) {
  RegularizeResult res;
  res.action = A;
  for (const auto& c : A.complex.cells()) res.carrier.emplace(c, c);
  for (int round = 0; round < 3; ++round) {
    if (isRegular(res.action)) return res;
    if (round == 2) break;
    Subdivision sd = barycentricSubdivision(res.action.complex);
    std::vector<Permutation> gens;
    for (const auto& g : res.action.group.generators()) {
      gens.push_back(extendOverSubdivision(g, res.action.complex));
    }
    std::vector<Permutation> elems;
    for (const auto& g : res.action.group.elements()) {
      elems.push_back(extendOverSubdivision(g, res.action.complex));
    }
    res.action.group = PermutationGroup::fromElements(std::move(elems), std::move(gens));
    // Compose carrier maps: new cell -> subdivision carrier -> original.
    std::map<Simplex, Simplex> composed;
    for (const auto& [cell, mid] : sd.carrier) {
      composed.emplace(cell, res.carrier.at(mid));
    }
    res.carrier = std::move(composed);
    res.action.complex = sd.complex;
    res.subdivisions = round + 1;
  }
  throw Error(Errc::NotRegular, "action not regular after two subdivisions");
}

std::set<Simplex> transportCells(const std::set<Simplex>& cells,
                                 const std::map<Simplex, Simplex>& carrier,
                                 const SimplicialComplex& refined, int dimFilter) {
  std::set<Simplex> out;
  for (const auto& c : refined.cells()) {
    if (c.dim() != dimFilter) continue;
    auto it = carrier.find(c);
    if (it != carrier.end() && cells.count(it->second)) out.insert(c);
  }
  return out;
}

namespace {

LocalGroupLabel classifyStabilizer(const std::vector<Permutation>& stab,
                                   const SimplicialComplex& K) {
  LocalGroupLabel label;
  label.order = static_cast<long long>(stab.size());
  for (const auto& g : stab) {
    if (!g.isIdentity()) label.generators.push_back(g.cycleNotation());
  }
  if (label.order == 1) {
    label.kind = GroupKind::Trivial;
    return label;
  }

  std::vector<long long> orders;
  for (const auto& g : stab) {
    if (!g.isIdentity()) orders.push_back(g.order());
  }
  std::sort(orders.begin(), orders.end());

  // Order-2 groups generated by an element fixing a top-codimension cell
  // pointwise act as reflections.
  if (label.order == 2) {
    const Permutation* h = nullptr;
    for (const auto& g : stab) {
      if (!g.isIdentity()) h = &g;
    }
    bool fixesWall = false;
    for (const auto& c : K.cellsOfDim(K.dim() - 1)) {
      bool pointwise = true;
      for (const auto& v : c.vertices()) {
        if (h->apply(v) != v) {
          pointwise = false;
          break;
        }
      }
      if (pointwise) {
        fixesWall = true;
        break;
      }
    }
    if (fixesWall) {
      label.kind = GroupKind::Reflection;
      return label;
    }
  }

  bool cyclic = std::find(orders.begin(), orders.end(), label.order) != orders.end();
  if (cyclic) {
    label.kind = GroupKind::Cyclic;
    return label;
  }
  bool indexTwoCyclic =
      std::find(orders.begin(), orders.end(), label.order / 2) != orders.end();
  if (label.order % 2 == 0 && indexTwoCyclic) {
    label.kind = GroupKind::Dihedral;
    return label;
  }

  // Canonical token from order and element-order multiset: "o12(2^3,3^8)".
  label.kind = GroupKind::Named;
  std::map<long long, int> mult;
  for (long long o : orders) ++mult[o];
  std::ostringstream os;
  os << "o" << label.order << "(";
  bool first = true;
  for (const auto& [o, count] : mult) {
    if (!first) os << ",";
    os << o << "^" << count;
    first = false;
  }
  os << ")";
  label.name = os.str();
  return label;
}

std::vector<Permutation> pointwiseStabilizer(const SimplicialAction& A, const Simplex& cell) {
  std::vector<Permutation> stab;
  for (const auto& g : A.group.elements()) {
    bool fixes = true;
    for (const auto& v : cell.vertices()) {
      if (g.apply(v) != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) stab.push_back(g);
  }
  return stab;
}

}  // namespace

StabilizerInfo stabilizer(const SimplicialAction& A, const Simplex& cell) {
  if (!A.complex.contains(cell)) {
    throw Error(Errc::CellNotFound, "cell " + cell.str() + " not in the complex");
  }
  StabilizerInfo info;
  info.cell = cell;
  info.pointwiseStabilizer = pointwiseStabilizer(A, cell);
  info.order = static_cast<long long>(info.pointwiseStabilizer.size());
  info.label = classifyStabilizer(info.pointwiseStabilizer, A.complex);
  return info;
}

OrbifoldComplex quotient(const SimplicialAction& A,
                         const std::set<Simplex>& manifoldBoundaryFaces) {
  if (!isRegular(A)) throw Error(Errc::NotRegular, "quotient requires a regular action");
  std::string reason;
  if (!isPurePseudomanifold(A.complex, &reason)) throw Error(Errc::NotPseudomanifold, reason);
  for (const auto& b : manifoldBoundaryFaces) {
    if (!A.complex.contains(b)) {
      throw Error(Errc::BoundaryNotInvariant, "boundary face " + b.str() + " not in complex");
    }
  }
  for (const auto& g : A.group.generators()) {
    for (const auto& b : manifoldBoundaryFaces) {
      if (!manifoldBoundaryFaces.count(g.apply(b))) {
        throw Error(Errc::BoundaryNotInvariant,
                    "boundary face " + b.str() + " leaves the boundary set under the action");
      }
    }
  }

  // Vertex orbit representatives: lexicographically least member.
  std::map<VertexId, VertexId> rep;
  for (const auto& v : A.complex.vertexList()) {
    if (rep.count(v)) continue;
    std::set<VertexId> orbit;
    for (const auto& g : A.group.elements()) orbit.insert(g.apply(v));
    const VertexId& least = *orbit.begin();
    for (const auto& u : orbit) rep.emplace(u, least);
  }
  auto project = [&](const Simplex& c) {
    std::vector<VertexId> vs;
    vs.reserve(c.size());
    for (const auto& v : c.vertices()) vs.push_back(rep.at(v));
    return Simplex(std::move(vs));  // regularity keeps these duplicate-free
  };

  // Least original cell per quotient cell, for label computation.
  std::map<Simplex, Simplex> leastPreimage;
  CellSet cells;
  for (const auto& c : A.complex.cells()) {
    Simplex q = project(c);
    auto it = leastPreimage.find(q);
    if (it == leastPreimage.end()) {
      leastPreimage.emplace(q, c);
    } else if (c < it->second) {
      it->second = c;
    }
    cells.insert(std::move(q));
  }

  std::map<Simplex, LocalGroupLabel> labels;
  for (const auto& [q, pre] : leastPreimage) {
    LocalGroupLabel l = classifyStabilizer(pointwiseStabilizer(A, pre), A.complex);
    if (!l.trivial()) labels.emplace(q, std::move(l));
  }

  std::set<Simplex> bdry;
  for (const auto& b : manifoldBoundaryFaces) bdry.insert(project(b));

  return OrbifoldComplex(SimplicialComplex::fromClosedCells(std::move(cells)),
                         std::move(labels), std::move(bdry));
}

bool coveringMultiplicativityCheck(const SimplicialAction& A) {
  if (!isRegular(A)) throw Error(Errc::NotRegular, "multiplicativity requires regularity");
  SimplicialComplex tb = topologicalBoundary(A.complex);
  std::set<Simplex> bdry;
  if (!tb.empty()) {
    for (const auto& b : tb.cellsOfDim(tb.dim())) bdry.insert(b);
  }
  OrbifoldComplex Q = quotient(A, bdry);
  Rational lhs(eulerCharTop(A.complex));
  Rational rhs = Rational(A.group.order()) * eulerChar(Q);
  return lhs == rhs;
}

}  // namespace orb
