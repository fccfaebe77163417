#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apsum {

enum class ErrorCode {
  kOverflow,
  kInvalidGenerators,
  kNotCoprime,
  kInvalidSeed,
  kAperyBaseNotInSemigroup,
  kNotMember,
  kResidueOutOfRange,
  kBelowMinimalityThreshold,
  kCaseBoundary,
  kCatalogInvalidForSeed,
  kNoCatalogForSeed,
  kUnsupportedNonFreeCone,
  kTCountMismatch,
  kUnsupportedEmbeddingDimension,
  kCheckpointMismatch,
};

/// Stable camelCase identifier, e.g. "notCoprime". Used in CLI and JSON output.
std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every module. Carries a stable code so callers
/// (notably the CLI) can map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace apsum
