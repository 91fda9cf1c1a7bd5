/**
 * Typed error codes shared across the library. Each code mirrors one of the
 * documented failure modes of an operation; the CLI maps codes to exit codes.
 */
#ifndef ORB_ERROR_HPP
#define ORB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orb {

enum class Errc {
  DuplicateVertexInCell,
  NotPseudomanifold,
  InvalidOrbifold,
  NotSubcomplex,
  NotBijection,
  NotRegular,
  BoundaryNotInvariant,
  CellNotFound,
  NotAPartition,
  NotMinimal,
  SingularOnly,
  UnclassifiableSingularity,
  EvenDimension,
  WrongDimension,
  HasBoundary,
  NonTerminating,
  OrderTooSmall,
  UnknownEntry,
  ParseError,
  Internal,
};

const char* errcName(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errcName(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errcName(Errc c) {
  switch (c) {
    case Errc::DuplicateVertexInCell: return "DuplicateVertexInCell";
    case Errc::NotPseudomanifold: return "NotPseudomanifold";
    case Errc::InvalidOrbifold: return "InvalidOrbifold";
    case Errc::NotSubcomplex: return "NotSubcomplex";
    case Errc::NotBijection: return "NotBijection";
    case Errc::NotRegular: return "NotRegular";
    case Errc::BoundaryNotInvariant: return "BoundaryNotInvariant";
    case Errc::CellNotFound: return "CellNotFound";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::SingularOnly: return "SingularOnly";
    case Errc::UnclassifiableSingularity: return "UnclassifiableSingularity";
    case Errc::EvenDimension: return "EvenDimension";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::HasBoundary: return "HasBoundary";
    case Errc::NonTerminating: return "NonTerminating";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::UnknownEntry: return "UnknownEntry";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace orb

#endif  // ORB_ERROR_HPP
