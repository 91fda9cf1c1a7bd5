/**
 * Text documents for orbifold complexes and simplicial actions.
 *
 * Orbifold document layout (order fixed, '#' starts a comment):
 *
 *   dimension: 2
 *   vertices: N S e00 e01 e02 e03
 *   maximal_cells:
 *     N e00 e01
 *     ...
 *   labels:
 *     N : 3 cyclic
 *     e00 e01 : 2 reflection
 *   boundary_faces:
 *     e00 e01
 *   metadata:
 *     name = teardrop3
 *
 * Vertex tokens are whitespace-free and must not be the bare ":" token.
 * Action documents add a "base:" line ("inline" or "file <path>") and a
 * generators section, one generator per line, cycles separated by ";":
 *
 *   generators:
 *     e00 e01 e02 ; e03 e04
 *
 * Serialization is canonical (sorted cells, sorted metadata), so documents
 * round-trip byte-identically.
 */
#ifndef ORB_IO_HPP
#define ORB_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orb/action.hpp"

namespace orb {

struct LabelEntry {
  std::vector<VertexId> cell;
  long long order = 1;
  std::string kind;  // kindToken form
};

struct OrbifoldDocument {
  int dimension = 0;
  std::vector<VertexId> vertices;
  std::vector<std::vector<VertexId>> maximalCells;
  std::vector<LabelEntry> labels;
  std::vector<std::vector<VertexId>> boundaryFaces;
  std::map<std::string, std::string> metadata;
};

struct ActionDocument {
  std::optional<std::string> baseFile;  // set when "base: file <path>"
  OrbifoldDocument base;                // meaningful when inline
  std::vector<std::vector<std::vector<VertexId>>> generators;  // cycles of tokens
  std::map<std::string, std::string> metadata;
};

/// Throws Error(ParseError) with a line reference on malformed input.
OrbifoldDocument parseOrbifoldDocument(const std::string& text);
std::string serializeOrbifoldDocument(const OrbifoldDocument& doc);

ActionDocument parseActionDocument(const std::string& text);
std::string serializeActionDocument(const ActionDocument& doc);

/// Builds the in-memory orbifold. Throws ParseError when the declared
/// dimension does not match the complex.
OrbifoldComplex documentToOrbifold(const OrbifoldDocument& doc);
OrbifoldDocument orbifoldToDocument(const OrbifoldComplex& O,
                                    const std::map<std::string, std::string>& metadata = {});

struct LoadedAction {
  SimplicialAction action;
  std::set<Simplex> boundaryFaces;
  std::map<std::string, std::string> metadata;
};

/// Assembles the action over an already-resolved base document.
LoadedAction actionFromDocuments(const ActionDocument& action, const OrbifoldDocument& base);

std::string readFileOrThrow(const std::string& path);   // ParseError on IO failure
void writeFileOrThrow(const std::string& path, const std::string& content);

}  // namespace orb

#endif  // ORB_IO_HPP
