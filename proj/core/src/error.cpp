#include "apsum/error.hpp"

namespace apsum {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kInvalidGenerators: return "invalidGenerators";
    case ErrorCode::kNotCoprime: return "notCoprime";
    case ErrorCode::kInvalidSeed: return "invalidSeed";
    case ErrorCode::kAperyBaseNotInSemigroup: return "aperyBaseNotInSemigroup";
    case ErrorCode::kNotMember: return "notMember";
    case ErrorCode::kResidueOutOfRange: return "residueOutOfRange";
    case ErrorCode::kBelowMinimalityThreshold: return "belowMinimalityThreshold";
    case ErrorCode::kCaseBoundary: return "caseBoundary";
    case ErrorCode::kCatalogInvalidForSeed: return "catalogInvalidForSeed";
    case ErrorCode::kNoCatalogForSeed: return "noCatalogForSeed";
    case ErrorCode::kUnsupportedNonFreeCone: return "unsupportedNonFreeCone";
    case ErrorCode::kTCountMismatch: return "tCountMismatch";
    case ErrorCode::kUnsupportedEmbeddingDimension: return "unsupportedEmbeddingDimension";
    case ErrorCode::kCheckpointMismatch: return "checkpointMismatch";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace apsum
