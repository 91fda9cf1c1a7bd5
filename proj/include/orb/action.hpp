/**
 * Finite permutation groups acting simplicially on complexes, and the
 * quotient-orbifold construction with isotropy labels.
 */
#ifndef ORB_ACTION_HPP
#define ORB_ACTION_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "orb/orbifold.hpp"

namespace orb {

/// Vertex permutation, stored without fixed points so equal functions
/// compare equal regardless of how they were produced.
class Permutation {
 public:
  Permutation() = default;

  /// Throws NotBijection when the mapping is not injective.
  static Permutation fromMapping(const std::map<VertexId, VertexId>& mapping);
  /// Disjoint cycles over vertex tokens.
  static Permutation fromCycles(const std::vector<std::vector<VertexId>>& cycles);

  VertexId apply(const VertexId& v) const;
  Simplex apply(const Simplex& s) const;

  bool isIdentity() const { return moved_.empty(); }
  const std::map<VertexId, VertexId>& mapping() const { return moved_; }

  /// Composition: (a.then(b))(x) == b(a(x)).
  Permutation then(const Permutation& b) const;
  Permutation inverse() const;
  /// Order as a group element.
  long long order() const;

  /// Canonical display token: "(a b c)(d e)", cycles sorted by least element;
  /// the identity prints as "()".
  std::string cycleNotation() const;

  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.moved_ < b.moved_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.moved_ == b.moved_;
  }

 private:
  std::map<VertexId, VertexId> moved_;
};

/// Finite permutation group with its elements fully enumerated.
class PermutationGroup {
 public:
  PermutationGroup();  // the trivial group

  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  long long order() const { return static_cast<long long>(elements_.size()); }

  friend PermutationGroup closeGroup(const std::vector<Permutation>&,
                                     const std::vector<VertexId>&);
  /// Builds directly from an already-closed element set (checked).
  static PermutationGroup fromElements(std::vector<Permutation> elements,
                                       std::vector<Permutation> generators);

 private:
  std::vector<Permutation> elements_;  // sorted, identity included
  std::vector<Permutation> generators_;
};

/// Breadth-first closure of the generators. Every generator must permute the
/// given vertex set (throws NotBijection otherwise); an empty generator list
/// yields the trivial group.
PermutationGroup closeGroup(const std::vector<Permutation>& generators,
                            const std::vector<VertexId>& domain);

struct SimplicialAction {
  PermutationGroup group;
  SimplicialComplex complex;
};

/// Checks that every group element maps cells to cells. Throws NotBijection
/// when a generator moves a vertex outside the complex.
void requireSimplicial(const SimplicialAction& A);

/// True iff the quotient complex is simplicial and genuine:
///  - every element fixing a cell setwise fixes it pointwise,
///  - no cell has two vertices in one orbit,
///  - cells with equal vertex-orbit sets lie in a single cell orbit.
bool isRegular(const SimplicialAction& A);

struct RegularizeResult {
  SimplicialAction action;
  int subdivisions = 0;
  /// Composed carrier: cells of the final complex -> cells of the original.
  std::map<Simplex, Simplex> carrier;
};

/// Barycentrically subdivides (extending the action over flag vertices) until
/// isRegular holds; classically at most two subdivisions are needed.
RegularizeResult regularize(const SimplicialAction& A);

/// Transports a set of cells through a carrier map: the cells of the refined
/// complex whose carrier lies in `cells` and whose dimension matches.
std::set<Simplex> transportCells(const std::set<Simplex>& cells,
                                 const std::map<Simplex, Simplex>& carrier,
                                 const SimplicialComplex& refined, int dimFilter);

struct StabilizerInfo {
  Simplex cell;
  std::vector<Permutation> pointwiseStabilizer;  // identity included
  long long order = 1;
  LocalGroupLabel label;  // classified kind, plus generator tokens
};

/// Pointwise stabilizer of a cell; throws CellNotFound.
StabilizerInfo stabilizer(const SimplicialAction& A, const Simplex& cell);

/// Quotient orbifold of a regular action on a pure pseudomanifold-with-
/// boundary whose declared boundary faces are permuted among themselves.
/// Cells are orbit cells named by least representatives; labels are the
/// isotropy data of the least representative of each orbit.
OrbifoldComplex quotient(const SimplicialAction& A,
                         const std::set<Simplex>& manifoldBoundaryFaces);

/// chi_top(complex) == |group| * chi(quotient), exactly. The quotient is
/// taken with the full topological boundary declared.
bool coveringMultiplicativityCheck(const SimplicialAction& A);

}  // namespace orb

#endif  // ORB_ACTION_HPP
