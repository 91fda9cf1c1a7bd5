#include "orb/complex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace orb {

Simplex::Simplex(std::vector<VertexId> vertices) : verts_(std::move(vertices)) {
  std::sort(verts_.begin(), verts_.end());
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    if (verts_[i] == verts_[i - 1]) {
      throw Error(Errc::DuplicateVertexInCell, "vertex '" + verts_[i] + "' repeats in cell");
    }
  }
}

bool Simplex::hasVertex(const VertexId& v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::hasFace(const Simplex& face) const {
  return std::includes(verts_.begin(), verts_.end(), face.verts_.begin(), face.verts_.end());
}

std::vector<Simplex> Simplex::properFaces() const {
  std::vector<Simplex> out;
  const std::size_t n = verts_.size();
  if (n <= 1) return out;
  // Subset enumeration; cells here have dimension <= 3 so this stays tiny.
  for (std::size_t mask = 1; mask + 1 < (1ull << n); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ull << i)) sub.push_back(verts_[i]);
    }
    out.emplace_back(std::move(sub));
  }
  return out;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (verts_.size() <= 1) return out;
  for (std::size_t skip = 0; skip < verts_.size(); ++skip) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (i != skip) sub.push_back(verts_[i]);
    }
    out.emplace_back(std::move(sub));
  }
  return out;
}

std::string Simplex::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) os << ",";
    os << verts_[i];
  }
  os << "}";
  return os.str();
}

void SimplicialComplex::finalize() {
  ordered_.assign(cells_.begin(), cells_.end());
  dim_ = -1;
  for (const auto& c : cells_) dim_ = std::max(dim_, c.dim());
}

SimplicialComplex SimplicialComplex::fromMaximalCells(
    const std::vector<std::vector<VertexId>>& maximal) {
  std::vector<Simplex> cells;
  cells.reserve(maximal.size());
  for (const auto& vs : maximal) cells.emplace_back(vs);
  return fromCells(cells);
}

SimplicialComplex SimplicialComplex::fromCells(const std::vector<Simplex>& cells) {
  SimplicialComplex K;
  for (const auto& c : cells) {
    if (c.emptyCell()) continue;
    K.cells_.insert(c);
    for (auto& f : c.properFaces()) K.cells_.insert(std::move(f));
  }
  K.finalize();
  return K;
}

SimplicialComplex SimplicialComplex::fromClosedCells(CellSet cells) {
  SimplicialComplex K;
  K.cells_ = std::move(cells);
  for (const auto& c : K.cells_) {
    for (const auto& f : c.properFaces()) {
      if (!K.cells_.count(f)) {
        throw Error(Errc::Internal, "cell set not face-closed at " + f.str());
      }
    }
  }
  K.finalize();
  return K;
}

std::vector<Simplex> SimplicialComplex::cellsOfDim(int d) const {
  std::vector<Simplex> out;
  for (const auto& c : ordered_) {
    if (c.dim() == d) out.push_back(c);
  }
  return out;
}

std::vector<VertexId> SimplicialComplex::vertexList() const {
  std::vector<VertexId> out;
  for (const auto& c : ordered_) {
    if (c.dim() == 0) out.push_back(c.vertices()[0]);
    else break;  // ordered_ is dim-major
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::facetCells() const {
  // Face closure means a cell is maximal iff it is a facet of nothing.
  std::unordered_set<Simplex, SimplexHash> covered;
  for (const auto& c : ordered_) {
    for (auto& f : c.facets()) covered.insert(std::move(f));
  }
  std::vector<Simplex> out;
  for (const auto& c : ordered_) {
    if (!covered.count(c)) out.push_back(c);
  }
  return out;
}

std::map<Simplex, std::vector<Simplex>> SimplicialComplex::cofacetsOfDim(int d) const {
  std::map<Simplex, std::vector<Simplex>> out;
  for (const auto& c : ordered_) {
    if (c.dim() == d) out[c];
  }
  for (const auto& c : ordered_) {
    if (c.dim() != d + 1) continue;
    for (const auto& f : c.facets()) {
      auto it = out.find(f);
      if (it != out.end()) it->second.push_back(c);
    }
  }
  return out;
}

bool SimplicialComplex::isPure() const {
  if (empty()) return true;
  for (const auto& c : facetCells()) {
    if (c.dim() != dim_) return false;
  }
  return true;
}

long long eulerCharTop(const SimplicialComplex& K) {
  long long chi = 0;
  for (const auto& c : K.cells()) chi += (c.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

bool isPurePseudomanifold(const SimplicialComplex& K, std::string* reason) {
  if (K.empty()) return true;
  if (!K.isPure()) {
    if (reason) *reason = "complex is not pure of dimension " + std::to_string(K.dim());
    return false;
  }
  if (K.dim() == 0) return true;
  for (const auto& [face, cof] : K.cofacetsOfDim(K.dim() - 1)) {
    if (cof.empty() || cof.size() > 2) {
      if (reason) {
        *reason = "face " + face.str() + " lies in " + std::to_string(cof.size()) +
                  " top cells";
      }
      return false;
    }
  }
  return true;
}

SimplicialComplex topologicalBoundary(const SimplicialComplex& K) {
  std::string reason;
  if (!isPurePseudomanifold(K, &reason)) throw Error(Errc::NotPseudomanifold, reason);
  if (K.empty() || K.dim() == 0) return SimplicialComplex();
  std::vector<Simplex> boundary;
  for (const auto& [face, cof] : K.cofacetsOfDim(K.dim() - 1)) {
    if (cof.size() == 1) boundary.push_back(face);
  }
  return SimplicialComplex::fromCells(boundary);
}

VertexId encodeCellName(const Simplex& s) {
  if (s.size() == 1) return s.vertices()[0];
  std::string name = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) name += "+";
    name += s.vertices()[i];
  }
  name += ")";
  return name;
}

Subdivision barycentricSubdivision(const SimplicialComplex& K) {
  Subdivision out;
  CellSet cells;
  std::map<Simplex, Simplex> carrier;

  // Flags are built by extending chains downward from their maximal element,
  // so every flag is produced exactly once with a fixed carrier.
  std::vector<Simplex> stack;
  std::function<void(const Simplex&)> recurse = [&](const Simplex& minCell) {
    std::vector<VertexId> names;
    names.reserve(stack.size());
    for (const auto& s : stack) names.push_back(encodeCellName(s));
    Simplex flag{names};
    cells.insert(flag);
    carrier.emplace(std::move(flag), stack.front());
    for (const auto& f : minCell.properFaces()) {
      if (!K.contains(f)) continue;  // always present in a closed complex
      stack.push_back(f);
      recurse(f);
      stack.pop_back();
    }
  };

  for (const auto& top : K.cells()) {
    stack.assign(1, top);
    recurse(top);
  }

  out.complex = SimplicialComplex::fromClosedCells(std::move(cells));
  out.carrier = std::move(carrier);
  return out;
}

Subdivision derivedAtCells(const SimplicialComplex& K, const CellSet& seed) {
  // The starred set must be closed under cofaces so that its complement is a
  // subcomplex; close it here.
  CellSet starrySet;
  for (const auto& c : K.cells()) {
    if (seed.count(c)) {
      starrySet.insert(c);
      continue;
    }
    for (const auto& f : c.properFaces()) {
      if (seed.count(f)) {
        starrySet.insert(c);
        break;
      }
    }
  }

  Subdivision out;
  if (starrySet.empty()) {
    out.complex = K;
    for (const auto& c : K.cells()) out.carrier.emplace(c, c);
    return out;
  }
  std::vector<Simplex> starry(starrySet.begin(), starrySet.end());
  CellSet cells;
  std::map<Simplex, Simplex> carrier;

  // Untouched cells survive as themselves.
  for (const auto& c : K.cells()) {
    if (!starrySet.count(c)) {
      cells.insert(c);
      carrier.emplace(c, c);
    }
  }

  // New cells: A * b(s1) * ... * b(sk) for chains s1 < ... < sk in M and
  // A in Q a (possibly empty) face of s1. Carrier is sk.
  std::vector<Simplex> chain;  // ascending
  std::function<void()> emitWithBases = [&]() {
    const Simplex& lo = chain.front();
    const Simplex& hi = chain.back();
    std::vector<VertexId> barys;
    for (const auto& s : chain) barys.push_back(encodeCellName(s));
    // A = empty base
    {
      Simplex cell{barys};
      carrier.emplace(cell, hi);
      cells.insert(std::move(cell));
    }
    // A = any face of lo that is not starred (i.e. lies in Q)
    for (const auto& f : lo.properFaces()) {
      if (starrySet.count(f)) continue;
      std::vector<VertexId> names = barys;
      for (const auto& v : f.vertices()) names.push_back(v);
      Simplex cell{std::move(names)};
      carrier.emplace(cell, hi);
      cells.insert(std::move(cell));
    }
  };
  std::function<void(const Simplex&)> descend = [&](const Simplex& minCell) {
    emitWithBases();
    for (const auto& f : minCell.properFaces()) {
      if (!starrySet.count(f)) continue;
      chain.insert(chain.begin(), f);
      descend(f);
      chain.erase(chain.begin());
    }
  };
  for (const auto& top : starry) {
    chain.assign(1, top);
    descend(top);
  }

  out.complex = SimplicialComplex::fromClosedCells(std::move(cells));
  out.carrier = std::move(carrier);
  return out;
}

Subdivision derivedNearSubcomplex(const SimplicialComplex& K, const CellSet& L) {
  std::unordered_set<std::string> lverts;
  for (const auto& c : L) {
    if (!K.contains(c)) throw Error(Errc::NotSubcomplex, "cell " + c.str() + " not in complex");
    for (const auto& v : c.vertices()) lverts.insert(v);
  }
  CellSet seed;
  for (const auto& c : K.cells()) {
    if (L.count(c)) continue;
    for (const auto& v : c.vertices()) {
      if (lverts.count(v)) {
        seed.insert(c);
        break;
      }
    }
  }
  return derivedAtCells(K, seed);
}

std::vector<std::vector<Simplex>> connectedComponents(const SimplicialComplex& K,
                                                      const std::vector<Simplex>& subset) {
  for (const auto& c : subset) {
    if (!K.contains(c)) throw Error(Errc::NotSubcomplex, "cell " + c.str() + " not in complex");
  }
  // Union-find over the subset; the face relation is covered by uniting each
  // cell with those of its proper faces that are also in the subset.
  std::vector<Simplex> items(subset.begin(), subset.end());
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  std::unordered_map<Simplex, std::size_t, SimplexHash> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);

  std::vector<std::size_t> parent(items.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (std::size_t i = 0; i < items.size(); ++i) {
    for (const auto& f : items[i].properFaces()) {
      auto it = index.find(f);
      if (it != index.end()) unite(i, it->second);
    }
  }

  std::map<std::size_t, std::vector<Simplex>> groups;
  for (std::size_t i = 0; i < items.size(); ++i) groups[find(i)].push_back(items[i]);
  std::vector<std::vector<Simplex>> components;
  for (auto& [root, cells] : groups) components.push_back(std::move(cells));
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

SimplicialComplex coneOver(const SimplicialComplex& K, const VertexId& apex) {
  std::vector<Simplex> cells;
  cells.emplace_back(std::vector<VertexId>{apex});
  for (const auto& c : K.cells()) {
    cells.push_back(c);
    std::vector<VertexId> joined = c.vertices();
    joined.push_back(apex);
    cells.emplace_back(std::move(joined));
  }
  return SimplicialComplex::fromCells(cells);
}

SimplicialComplex closureComplex(const std::vector<Simplex>& cells) {
  return SimplicialComplex::fromCells(cells);
}

}  // namespace orb
