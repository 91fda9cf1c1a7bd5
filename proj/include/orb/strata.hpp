/**
 * Stratification of an orbifold complex: equal-label cells connected through
 * the face relation form strata; strata carry the closure partial order whose
 * complete chains and minimal elements drive the decomposition machinery.
 */
#ifndef ORB_STRATA_HPP
#define ORB_STRATA_HPP

#include <set>
#include <utility>
#include <vector>

#include "orb/orbifold.hpp"

namespace orb {

struct Stratum {
  std::vector<Simplex> cells;  // open cells, canonical order
  LocalGroupLabel label;       // constant across the stratum
  int dim = 0;                 // max cell dimension
  bool isSingular = false;     // label.order > 1

  const Simplex& leastCell() const { return cells.front(); }
};

/// Partition of the open cells into connected equal-label groups.
/// Strata are ordered canonically by least cell. Throws InvalidOrbifold.
std::vector<Stratum> stratify(const OrbifoldComplex& O);

struct StrataPoset {
  std::vector<Stratum> strata;
  /// Full order: (i, j) present iff S_i <= S_j (reflexive pairs included).
  std::set<std::pair<int, int>> order;
  /// Covering relation (transitive reduction), pairs (i, j) with S_i < S_j.
  std::vector<std::pair<int, int>> hasse;

  bool le(int i, int j) const { return order.count({i, j}) > 0; }
};

/// Builds the closure order S_i <= S_j iff S_i is contained in closure(S_j),
/// verifies antisymmetry, and reduces to the Hasse relation.
/// Throws NotAPartition when the strata do not partition the cells of O.
StrataPoset strataPoset(const OrbifoldComplex& O, std::vector<Stratum> strata);

/// All maximal chains (lower complete, upper complete and full) of the poset,
/// restricted to singular strata when singularOnly is set. Chains are lists
/// of stratum indices from minimal to maximal, lexicographically sorted.
std::vector<std::vector<int>> completeChains(const StrataPoset& P, bool singularOnly = true);

/// Indices of the strata meeting closure(S) - S; each has label order a
/// proper multiple of S's.
std::vector<int> closureDecomposition(const OrbifoldComplex& O,
                                      const std::vector<Stratum>& strata, int index);

/// Minimal elements of the poset. Guarantees the paper-level facts for
/// them: closure(S) = S, and strata of dimension <= 2 pass a combinatorial
/// manifold check (throws Internal if either ever fails).
std::vector<int> minimalStrata(const StrataPoset& P);

/// Combinatorial manifold test for complexes of dimension <= 2 (vertex
/// degrees in dim 1, edge cofacets and vertex links in dim 2).
bool isCombinatorialManifold(const SimplicialComplex& K);

/// True iff the suborbifold spanned by `sub` is neat in O: its true boundary
/// (non-mirror topological-boundary faces plus inherited declared faces)
/// equals sub intersect dO as subcomplexes. The empty subcomplex is neat.
bool isNeat(const OrbifoldComplex& O, const SimplicialComplex& sub);

struct NeatDecomposition {
  OrbifoldComplex refined;       // O on the common subdivision the pieces live in
  OrbifoldComplex o1;            // closed neighborhood of the stratum
  OrbifoldComplex o2;            // closure of the complement
  OrbifoldComplex intersection;  // the shared frontier, a neat suborbifold
  int starredCells = 0;          // local subdivision work performed
  int globalSubdivisions = 0;    // fallback rounds that were needed
};

/// Extracts a neat decomposition around a minimal singular stratum: two
/// passes of derived subdivision near closure(S), then O1 = closed star,
/// O2 = complement closure. Every NeatDecomposition invariant and all three
/// boundary-decomposition identities are verified exactly before returning;
/// on failure one global barycentric subdivision is applied and the
/// extraction retried (at most twice).
/// Throws SingularOnly for regular strata and NotMinimal for non-minimal ones.
NeatDecomposition extractNeatDecomposition(const OrbifoldComplex& O, const Stratum& S);

}  // namespace orb

#endif  // ORB_STRATA_HPP
