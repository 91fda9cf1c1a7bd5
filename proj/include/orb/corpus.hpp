/**
 * Deterministic builders for the example orbifolds used throughout the test
 * suites and the CLI: the four compact 1-orbifolds, bad 2-orbifolds built by
 * direct labeling, disk quotients D^3/G for the cyclic, dihedral and
 * tetrahedral families, and mirror/double constructions.
 */
#ifndef ORB_CORPUS_HPP
#define ORB_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "orb/action.hpp"

namespace orb {

struct CorpusEntry {
  std::string name;
  OrbifoldComplex orbifold;
  std::string provenance;  // direct-labeled | quotient(...) | mirror(...) | double(...)
  std::optional<Rational> expectedChi;
  std::string chiSource;
};

/// [0,1], S^1, M_1, M_2 with chi 1, 0, 1/2, 0.
std::vector<CorpusEntry> buildDim1();

/// teardrop(n), spindle(n,m), turnover(n,m,r) as labeled suspensions.
/// Throws OrderTooSmall when an order is below 2.
std::vector<CorpusEntry> buildBad2(long long n, long long m, long long r);

/// Disk quotients D^3/G for G = Z2, Z3, Z6 (bipyramid rotations), the Klein
/// dihedral group of order 4, and the tetrahedral groups T12 and T24.
std::vector<CorpusEntry> buildDiskQuotients();

/// mirror(M) for the corpus manifolds-with-boundary and double(O) for the
/// boundary-carrying entries handed in.
std::vector<CorpusEntry> buildMirrorsAndDoubles(const std::vector<CorpusEntry>& entries);

/// The full registry, in stable listing order.
const std::vector<CorpusEntry>& allEntries();
const CorpusEntry& entryByName(const std::string& name);  // throws UnknownEntry

struct CorpusAction {
  std::string name;
  SimplicialAction action;          // already regular
  std::set<Simplex> boundaryFaces;  // declared manifold boundary
};

/// The group actions behind the disk quotients, regularized where needed.
const std::vector<CorpusAction>& corpusActions();

/// Base complexes the corpus is built from.
SimplicialComplex intervalComplex();
SimplicialComplex solidTriangleComplex();
SimplicialComplex tetraBallComplex();
SimplicialComplex bipyramidBallComplex(int gon);

}  // namespace orb

#endif  // ORB_CORPUS_HPP
