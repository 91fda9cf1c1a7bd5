/**
 * Theorem checkers: the half-boundary formula for odd-dimensional compact
 * orbifolds, the closed-odd vanishing statement, the closed 2-orbifold
 * formula as an independent oracle, and a machine-checked replay of the
 * decomposition proof as a step ledger.
 */
#ifndef ORB_VERIFY_HPP
#define ORB_VERIFY_HPP

#include <string>
#include <vector>

#include "orb/strata.hpp"

namespace orb {

struct CheckResult {
  std::string name;
  Rational expected;
  Rational actual;
  bool pass = false;
};

/// One extraction step of the decomposition proof, with every chi identity
/// evaluated exactly.
struct DecompositionStep {
  LocalGroupLabel stratumLabel;
  int stratumDim = 0;
  std::size_t stratumCells = 0;
  Rational chiO, chiO1, chiO2, chiF;
  Rational chiBdO, chiBdO1, chiBdO2, chiBdF;
  bool inclusionExclusionOk = false;  // chi(O) = chi(O1) + chi(O2) - chi(F)
  bool ledgerOk = false;              // chi(O) = chi(dO)/2 - chi(dF)/2
  bool pieceTheoremOk = false;        // chi(O1) = chi(dO1)/2
  bool linkBoundaryVanishesOk = false;  // chi(dF) = 0, the lower induction step

  bool pass() const {
    return inclusionExclusionOk && ledgerOk && pieceTheoremOk && linkBoundaryVanishesOk;
  }
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;
  std::vector<DecompositionStep> ledger;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    for (const auto& s : ledger) {
      if (!s.pass()) return false;
    }
    return true;
  }
};

/// chi(O) = chi(dO)/2 for odd-dimensional compact orbifolds.
/// Throws EvenDimension for even dimension and InvalidOrbifold on bad input.
VerificationReport checkMainTheorem(const OrbifoldComplex& O, const std::string& subject);

/// chi(O) = 0 for odd-dimensional closed orbifolds.
/// Throws EvenDimension / HasBoundary / InvalidOrbifold.
VerificationReport checkSatake(const OrbifoldComplex& O, const std::string& subject);

/// Closed formula for 2-orbifolds:
/// chi(O) = chi(|O|) - sum_corners (1 - 1/m)/2 - sum_cones (1 - 1/n),
/// with cone points and corner reflectors detected from the labels. Serves as
/// an oracle independent of the cell-sum euler characteristic.
/// Throws WrongDimension unless dim = 2, UnclassifiableSingularity when a
/// singular vertex fits neither pattern.
Rational twoOrbifoldFormula(const OrbifoldComplex& O);

/// Detected singular data of a 2-orbifold, for boundary structure checks.
struct TwoOrbifoldData {
  std::vector<long long> conePointOrders;        // sorted
  std::vector<long long> cornerReflectorOrders;  // sorted (m for D_m, order 2m)
  long long underlyingChi = 0;
  bool hasMirrorEdges = false;
};
TwoOrbifoldData analyzeTwoOrbifold(const OrbifoldComplex& O);

/// Replays the inductive proof: repeatedly extracts a neat neighborhood of a
/// minimal singular stratum, records the inclusion-exclusion and ledger
/// identities of the step, and recurses on the complement until a manifold
/// remains, which is checked directly. The step budget is the initial number
/// of singular strata plus one; exceeding it raises NonTerminating.
VerificationReport proveByDecomposition(const OrbifoldComplex& O, const std::string& subject);

}  // namespace orb

#endif  // ORB_VERIFY_HPP
