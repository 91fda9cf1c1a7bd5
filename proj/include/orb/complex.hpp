/**
 * Finite abstract simplicial complexes over named vertices.
 *
 * Complexes are immutable after construction and all operations are pure
 * functions returning fresh values, so everything here is safe to share
 * across threads. No geometry is stored; every construction is
 * combinatorial.
 */
#ifndef ORB_COMPLEX_HPP
#define ORB_COMPLEX_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "orb/error.hpp"

namespace orb {

/// Opaque vertex token, totally ordered by its string value.
using VertexId = std::string;

/// Non-empty sorted duplicate-free list of vertices; dim = size - 1.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the vertices; throws DuplicateVertexInCell on repeats.
  explicit Simplex(std::vector<VertexId> vertices);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  std::size_t size() const { return verts_.size(); }
  bool emptyCell() const { return verts_.empty(); }
  const std::vector<VertexId>& vertices() const { return verts_; }

  bool hasVertex(const VertexId& v) const;
  /// Subset test: is `face` a (not necessarily proper) face of this cell?
  bool hasFace(const Simplex& face) const;

  /// All non-empty proper faces.
  std::vector<Simplex> properFaces() const;
  /// Facets only (codimension-1 faces).
  std::vector<Simplex> facets() const;

  /// Canonical order: by dimension first, then lexicographically.
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.verts_.size() != b.verts_.size()) return a.verts_.size() < b.verts_.size();
    return a.verts_ < b.verts_;
  }
  friend bool operator==(const Simplex& a, const Simplex& b) { return a.verts_ == b.verts_; }
  friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }

  std::string str() const;  // "{a,b,c}"

 private:
  std::vector<VertexId> verts_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& v : s.vertices()) {
      h ^= std::hash<std::string>{}(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

using CellSet = std::set<Simplex>;

/// Finite abstract simplicial complex, closed under taking faces.
/// The empty complex is permitted (dim() == -1, chi == 0).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of the given maximal cells.
  static SimplicialComplex fromMaximalCells(const std::vector<std::vector<VertexId>>& maximal);
  /// Face closure of an arbitrary cell collection.
  static SimplicialComplex fromCells(const std::vector<Simplex>& cells);
  /// Adopts a collection already known to be face-closed (checked).
  static SimplicialComplex fromClosedCells(CellSet cells);

  bool empty() const { return cells_.empty(); }
  int dim() const { return dim_; }

  /// All cells in canonical (dim, lex) order.
  const std::vector<Simplex>& cells() const { return ordered_; }
  const CellSet& cellSet() const { return cells_; }
  bool contains(const Simplex& s) const { return cells_.count(s) > 0; }

  std::vector<Simplex> cellsOfDim(int d) const;
  std::size_t cellCount() const { return cells_.size(); }
  /// Vertices of the complex, sorted.
  std::vector<VertexId> vertexList() const;

  /// Cells not a proper face of any other cell, canonical order.
  std::vector<Simplex> facetCells() const;

  /// Cofacets (codim-1 cofaces) of each cell of dimension d, for all d cells.
  std::map<Simplex, std::vector<Simplex>> cofacetsOfDim(int d) const;

  /// True if every maximal cell has dimension dim().
  bool isPure() const;

 private:
  CellSet cells_;
  std::vector<Simplex> ordered_;
  int dim_ = -1;

  void finalize();
};

/// Sum of (-1)^dim over all cells; 0 for the empty complex.
long long eulerCharTop(const SimplicialComplex& K);

/// Face closure of the (n-1)-cells lying in exactly one n-cell.
/// Requires K to be a pure n-dimensional pseudomanifold-with-boundary
/// (every (n-1)-cell in 1 or 2 n-cells); throws NotPseudomanifold otherwise.
/// For n = 0 the boundary is empty.
SimplicialComplex topologicalBoundary(const SimplicialComplex& K);

/// Non-throwing pseudomanifold test; fills `reason` on failure if non-null.
bool isPurePseudomanifold(const SimplicialComplex& K, std::string* reason = nullptr);

/// Canonical vertex name for a subdivision vertex placed in cell `s`:
/// singletons keep their name, larger cells encode as "(v1+v2+...)".
VertexId encodeCellName(const Simplex& s);

/// A subdivided complex plus the carrier map sending each new cell to the
/// unique old cell whose interior contains its interior.
struct Subdivision {
  SimplicialComplex complex;
  std::map<Simplex, Simplex> carrier;
};

/// Barycentric subdivision: vertices are the cells of K, cells are flags
/// s0 < s1 < ... < sk. Preserves eulerCharTop.
Subdivision barycentricSubdivision(const SimplicialComplex& K);

/// Stellar subdivision at every cell of the coface closure of `seed`, in
/// decreasing dimension. Cells outside that closure survive unchanged.
Subdivision derivedAtCells(const SimplicialComplex& K, const CellSet& seed);

/// Derived subdivision of K relative to the closed subcomplex L: stars, in
/// decreasing dimension, exactly the cells that meet L without lying in L.
/// Cells of L survive unchanged; after one pass L is a full subcomplex.
Subdivision derivedNearSubcomplex(const SimplicialComplex& K, const CellSet& L);

/// Partition of `subset` into maximal groups connected by the face relation
/// (two cells adjacent iff one is a face of the other, both in the subset).
/// Groups are returned in canonical order (by least cell).
std::vector<std::vector<Simplex>> connectedComponents(const SimplicialComplex& K,
                                                      const std::vector<Simplex>& subset);

/// Cone over K with a fresh apex vertex.
SimplicialComplex coneOver(const SimplicialComplex& K, const VertexId& apex);

/// Face closure of the given cells as a standalone complex.
SimplicialComplex closureComplex(const std::vector<Simplex>& cells);

}  // namespace orb

#endif  // ORB_COMPLEX_HPP
