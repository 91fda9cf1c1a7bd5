/**
 * Orbifold complexes: compatible triangulations carrying local-group labels
 * on their cells, with the orbifold-boundary faces declared explicitly.
 *
 * Conventions baked into the type:
 *  - top cells are trivially labeled (the singular locus has empty interior);
 *  - topological-boundary faces split into declared boundary faces (in the
 *    orbifold boundary) and the rest, which must be mirror faces of order
 *    at least 2;
 *  - labels on faces are divisible by labels on cofaces (local groups only
 *    grow toward lower-dimensional cells).
 */
#ifndef ORB_ORBIFOLD_HPP
#define ORB_ORBIFOLD_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orb/complex.hpp"
#include "orb/rational.hpp"

namespace orb {

enum class GroupKind { Trivial, Cyclic, Dihedral, Reflection, Named };

/// Local group data attached to a cell: the order of Gamma_x and a coarse
/// classification, plus generator tokens when the orbifold was built as a
/// quotient. Label identity (for strata and validation) is (order, kind,
/// name); generators are informational.
struct LocalGroupLabel {
  long long order = 1;
  GroupKind kind = GroupKind::Trivial;
  std::string name;                      // canonical token for Named kinds
  std::vector<std::string> generators;   // quotient-built orbifolds only

  bool trivial() const { return order == 1; }
};

bool sameLabel(const LocalGroupLabel& a, const LocalGroupLabel& b);
bool labelLess(const LocalGroupLabel& a, const LocalGroupLabel& b);

/// "trivial" | "cyclic" | "dihedral" | "reflection" | "named:<token>"
std::string kindToken(const LocalGroupLabel& l);
/// Inverse of kindToken (order is supplied separately).
GroupKind parseKindToken(const std::string& token, std::string* namedName);

struct Violation;

/// A compatible triangulation of a compact orbifold.
class OrbifoldComplex {
 public:
  OrbifoldComplex() = default;  // the empty orbifold
  OrbifoldComplex(SimplicialComplex K, std::map<Simplex, LocalGroupLabel> labels,
                  std::set<Simplex> boundaryFaces);

  const SimplicialComplex& complex() const { return K_; }
  int dim() const { return K_.dim(); }
  bool empty() const { return K_.empty(); }

  /// Label of a cell; cells without an entry are trivially labeled.
  const LocalGroupLabel& label(const Simplex& cell) const;
  const std::map<Simplex, LocalGroupLabel>& nontrivialLabels() const { return labels_; }
  const std::set<Simplex>& boundaryFaces() const { return boundaryFaces_; }

  /// Cells of the closed subcomplex spanned by the declared boundary faces.
  CellSet boundarySubcomplexCells() const;

 private:
  SimplicialComplex K_;
  std::map<Simplex, LocalGroupLabel> labels_;  // nontrivial entries only
  std::set<Simplex> boundaryFaces_;
  // Validation result cache; the value is immutable, so a clean validate()
  // outcome stays true for the lifetime of the object (and its copies).
  mutable bool knownValid_ = false;

  friend std::vector<Violation> validate(const OrbifoldComplex&);
};

struct Violation {
  std::string rule;
  std::vector<Simplex> cells;
  std::string message;
};

/// Checks every OrbifoldComplex invariant; an empty result means valid.
/// Violations are data, not errors.
std::vector<Violation> validate(const OrbifoldComplex& O);

/// Throws InvalidOrbifold when validate(O) is non-empty.
void requireValid(const OrbifoldComplex& O, const char* who);

/// chi(O) = sum over all cells of (-1)^dim / order, exactly.
Rational eulerChar(const OrbifoldComplex& O);

/// The (n-1)-orbifold spanned by the declared boundary faces, with inherited
/// labels and no declared boundary of its own.
OrbifoldComplex orbifoldBoundary(const OrbifoldComplex& O);

/// Two copies of O glued along the closure of its boundary faces. Copy-two
/// vertices outside the gluing locus are renamed "v~2". The result has no
/// declared boundary and satisfies chi(2O) = 2 chi(O) - chi(dO).
OrbifoldComplex doubleAlongBoundary(const OrbifoldComplex& O);

/// Mirror orbifold mM of a manifold triangulation: same complex, every cell
/// of the topological boundary labeled (2, reflection), no declared boundary.
OrbifoldComplex mirrorManifold(const SimplicialComplex& M);

/// Checks chi(O1 u O2) = chi(O1) + chi(O2) - chi(O1 n O2) exactly, where O1
/// and O2 must be label-inheriting subcomplexes of O covering it.
bool chiInclusionExclusionCheck(const OrbifoldComplex& O, const OrbifoldComplex& O1,
                                const OrbifoldComplex& O2);

/// Barycentric subdivision with labels and boundary faces transported along
/// the carrier map; preserves eulerChar exactly.
OrbifoldComplex subdivideOrbifold(const OrbifoldComplex& O);

/// Rebuilds an orbifold on a subdivided complex: each new cell inherits the
/// label of its carrier, and the new boundary faces are the (n-1)-cells
/// carried by old boundary faces.
OrbifoldComplex transportOrbifold(const OrbifoldComplex& O, const Subdivision& sub);

/// Label-restricting suborbifold on the given closed cell set. Boundary faces
/// are the (n-1)-cells with exactly one cofacet inside the piece that are
/// either declared in O or listed in `extraBoundary` (the cut locus).
OrbifoldComplex restrictToSubcomplex(const OrbifoldComplex& O, const CellSet& cells,
                                     const CellSet& extraBoundary = {});

}  // namespace orb

#endif  // ORB_ORBIFOLD_HPP
