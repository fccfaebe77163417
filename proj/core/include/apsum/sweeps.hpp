#pragma once

// Grid sweeps for the uniqueness and Gamma_6 Apery conjectures, with an
// append-only JSONL checkpoint.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace apsum {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
  bool empty() const noexcept { return hi < lo; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses "lo..hi" or a single integer. Throws std::invalid_argument.
IntRange parse_range(std::string_view text);

enum class SweepKind { kUniqueness, kGamma6 };

struct SweepGrid {
  SweepKind kind = SweepKind::kUniqueness;
  int m = 5;
  IntRange a;
  IntRange d;
};

enum class Verdict { kMatch, kMismatch, kViolation, kSkip };
std::string_view to_string(Verdict v) noexcept;
std::optional<Verdict> parse_verdict(std::string_view text) noexcept;

struct UniquenessWitness {
  std::int64_t element = 0;
  std::int64_t count = 0;
  std::vector<std::vector<std::int64_t>> expansions;
  std::int64_t violation_count = 0;  // Apery elements with more than one expansion
  friend bool operator==(const UniquenessWitness&, const UniquenessWitness&) = default;
};

struct Gamma6Witness {
  std::int64_t n = 0;
  std::int64_t conjectured = 0;
  std::int64_t oracle = 0;
  std::int64_t mismatch_count = 0;
  friend bool operator==(const Gamma6Witness&, const Gamma6Witness&) = default;
};

using Witness = std::variant<std::monostate, UniquenessWitness, Gamma6Witness>;

struct SeedRecord {
  std::int64_t a = 0;
  std::int64_t d = 0;
  int m = 0;
  Verdict verdict = Verdict::kMatch;
  Witness witness;  // set iff verdict is kViolation or kMismatch
  std::int64_t ms = 0;
  friend bool operator==(const SeedRecord&, const SeedRecord&) = default;
};

/// Every (a, d) of the grid in sweep order: ascending a, then d.
std::vector<std::pair<std::int64_t, std::int64_t>> grid_seeds(const SweepGrid& grid);

/// Evaluates one seed. Non-coprime and non-minimally generated seeds are kSkip.
SeedRecord evaluate_seed(const SweepGrid& grid, std::int64_t a, std::int64_t d, bool timing = false);

std::string record_to_jsonl(const SeedRecord& record);

/// Throws std::invalid_argument on malformed input.
SeedRecord record_from_jsonl(std::string_view line);

struct SweepOptions {
  unsigned jobs = 1;
  bool timing = false;  // fill "ms"; otherwise 0 so re-runs are byte-identical
  std::optional<std::filesystem::path> checkpoint;
  bool resume = true;   // reuse valid records already in the checkpoint
};

struct SweepReport {
  SweepGrid grid;
  std::vector<SeedRecord> records;
  std::vector<std::size_t> counterexamples;  // indices into records
  std::size_t skipped = 0;
  std::size_t resumed = 0;  // records taken from the checkpoint
  std::int64_t elapsed_ms = 0;
  std::size_t cursor = 0;   // next grid index; records.size() when complete
};

struct ResumeState {
  std::size_t cursor = 0;
  std::vector<SeedRecord> records;
  std::optional<std::size_t> bad_line;  // 1-based line where reading stopped
  std::uintmax_t valid_bytes = 0;       // length of the valid prefix
};

/// Reads the valid prefix of a checkpoint. A missing or empty file gives
/// cursor 0. Throws Error(kCheckpointMismatch) when a valid record does not
/// match the grid seed at its position.
ResumeState resume(const std::filesystem::path& path, const SweepGrid& grid);

/// Appends records in order. Used by run_sweep; exposed for tests.
void checkpoint_append(const std::filesystem::path& path, const std::vector<SeedRecord>& records);

SweepReport run_sweep(const SweepGrid& grid, const SweepOptions& options = {});

SweepReport sweep_uniqueness(int m, IntRange a, IntRange d, const SweepOptions& options = {});
SweepReport sweep_gamma6(IntRange a, IntRange d, const SweepOptions& options = {});

/// Whole report as JSONL, one record per line.
std::string report_to_jsonl(const SweepReport& report);

}  // namespace apsum
