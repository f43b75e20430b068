#include "wittcv/error.hpp"

#include <cstdio>
#include <cstdlib>

namespace wittcv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::CharTooSmall: return "CharTooSmall";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotADerivation: return "NotADerivation";
    case ErrorCode::OutOfLemmaScope: return "OutOfLemmaScope";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NotRectifiable: return "NotRectifiable";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void internal_failure(const char* what) {
  std::fprintf(stderr, "wittcv: internal invariant violated: %s\n", what);
  std::abort();
}

}  // namespace wittcv
