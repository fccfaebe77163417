#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "doctest.h"

#include "apsum/error.hpp"
#include "apsum/sweeps.hpp"
#include "support/generators.hpp"

using namespace apsum;
using apsum::testing::error_code_of;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name)
      : path(fs::temp_directory_path() / ("apsum_test_" + std::to_string(::getpid()) + "_" + name)) {
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const SweepGrid kSmallGrid{SweepKind::kUniqueness, 5, {11, 16}, {1, 4}};

}  // namespace

TEST_CASE("ranges and verdicts") {
  CHECK(parse_range("11..40") == IntRange{11, 40});
  CHECK(parse_range("7") == IntRange{7, 7});
  CHECK_THROWS_AS(parse_range("a..b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("3..x"), std::invalid_argument);
  CHECK(IntRange{5, 4}.empty());
  for (auto v : {Verdict::kMatch, Verdict::kMismatch, Verdict::kViolation, Verdict::kSkip}) {
    CHECK(parse_verdict(to_string(v)) == v);
  }
  CHECK_FALSE(parse_verdict("maybe").has_value());
}

TEST_CASE("grid order is ascending a, then d") {
  const auto seeds = grid_seeds({SweepKind::kGamma6, 6, {3, 4}, {1, 2}});
  CHECK(seeds == std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 1}, {3, 2}, {4, 1}, {4, 2}});
}

TEST_CASE("seed evaluation") {
  const SweepGrid u5{SweepKind::kUniqueness, 5, {11, 11}, {1, 2}};
  CHECK(evaluate_seed(u5, 12, 2).verdict == Verdict::kSkip);
  CHECK(evaluate_seed(u5, 10, 1).verdict == Verdict::kSkip);  // not minimally generated
  const auto ok = evaluate_seed(u5, 11, 2);
  CHECK(ok.verdict == Verdict::kMatch);
  CHECK(std::holds_alternative<std::monostate>(ok.witness));
  CHECK(ok.ms == 0);
  const SweepGrid g6{SweepKind::kGamma6, 6, {16, 16}, {1, 1}};
  CHECK(evaluate_seed(g6, 16, 1).verdict == Verdict::kMatch);
}

TEST_CASE("JSONL records round trip") {
  const SeedRecord plain{11, 2, 5, Verdict::kMatch, std::monostate{}, 0};
  CHECK(record_to_jsonl(plain) == R"({"a":11,"d":2,"m":5,"verdict":"match","ms":0})");
  CHECK(record_from_jsonl(record_to_jsonl(plain)) == plain);

  const SeedRecord uv{9, 1, 6, Verdict::kViolation, UniquenessWitness{40, 2, {{0, 1, 1}, {2, 0, 0}}, 3}, 7};
  CHECK(record_from_jsonl(record_to_jsonl(uv)) == uv);
  const SeedRecord gm{17, 3, 6, Verdict::kMismatch, Gamma6Witness{4, 100, 83, 1}, 0};
  CHECK(record_from_jsonl(record_to_jsonl(gm)) == gm);

  CHECK_THROWS_AS(record_from_jsonl(R"({"a":11,"d":2,"m":5,"verdict":"violation","ms":0})"), std::invalid_argument);
  CHECK_THROWS_AS(record_from_jsonl(R"({"a":11,"d":2,"m":5,"verdict":"nope","ms":0})"), std::invalid_argument);
  CHECK_THROWS_AS(record_from_jsonl(R"({"a":11,"d":2)"), std::invalid_argument);
}

TEST_CASE("m = 5 uniqueness sweep has no violations") {
  const auto report = sweep_uniqueness(5, {11, 40}, {1, 10}, {.jobs = 4});
  CHECK(report.records.size() == 300);
  CHECK(report.counterexamples.empty());
  CHECK(report.cursor == report.records.size());
  for (const auto& r : report.records) CHECK(r.verdict != Verdict::kViolation);
}

TEST_CASE("degenerate m = 2 sweep runs") {
  const auto report = sweep_uniqueness(2, {3, 10}, {1, 5});
  CHECK(report.records.size() == 40);
  for (auto idx : report.counterexamples) {
    CHECK(std::holds_alternative<UniquenessWitness>(report.records[idx].witness));
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(sweep_uniqueness(1, {11, 12}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_uniqueness(5, {12, 11}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_gamma6({16, 20}, {0, 2}), std::invalid_argument);
}

TEST_CASE("determinism: serial and parallel runs agree byte for byte") {
  const auto serial = sweep_gamma6({16, 30}, {1, 6}, {.jobs = 1});
  const auto parallel = sweep_gamma6({16, 30}, {1, 6}, {.jobs = 8});
  CHECK(report_to_jsonl(serial) == report_to_jsonl(parallel));
  CHECK(report_to_jsonl(serial) == report_to_jsonl(sweep_gamma6({16, 30}, {1, 6}, {.jobs = 3})));
}

TEST_CASE("checkpoint: full run then resume does no new work") {
  TempFile file("full.jsonl");
  const auto first = run_sweep(kSmallGrid, {.jobs = 2, .checkpoint = file.path});
  CHECK(first.resumed == 0);
  const auto text = slurp(file.path);
  CHECK(text == report_to_jsonl(first));
  const auto second = run_sweep(kSmallGrid, {.jobs = 2, .checkpoint = file.path});
  CHECK(second.resumed == first.records.size());
  CHECK(report_to_jsonl(second) == text);
  CHECK(slurp(file.path) == text);
}

TEST_CASE("checkpoint: resume mid-grid continues at the next seed") {
  TempFile file("mid.jsonl");
  const auto full = run_sweep(kSmallGrid);
  std::vector<SeedRecord> head(full.records.begin(), full.records.begin() + 7);
  checkpoint_append(file.path, head);
  const auto state = resume(file.path, kSmallGrid);
  CHECK(state.cursor == 7);
  CHECK_FALSE(state.bad_line.has_value());
  const auto report = run_sweep(kSmallGrid, {.checkpoint = file.path});
  CHECK(report.resumed == 7);
  CHECK(report_to_jsonl(report) == report_to_jsonl(full));
  CHECK(slurp(file.path) == report_to_jsonl(full));
}

TEST_CASE("checkpoint: empty and missing files start at the grid start") {
  TempFile file("empty.jsonl");
  CHECK(resume(file.path, kSmallGrid).cursor == 0);
  std::ofstream(file.path).close();
  const auto state = resume(file.path, kSmallGrid);
  CHECK(state.cursor == 0);
  CHECK(state.records.empty());
}

TEST_CASE("checkpoint: truncated final line") {
  TempFile file("trunc.jsonl");
  const auto full = run_sweep(kSmallGrid, {.checkpoint = file.path});
  auto text = slurp(file.path);
  const auto keep = text.size() - 10;  // cut into the last record
  fs::resize_file(file.path, keep);
  const auto state = resume(file.path, kSmallGrid);
  CHECK(state.cursor == full.records.size() - 1);
  REQUIRE(state.bad_line.has_value());
  CHECK(*state.bad_line == full.records.size());
  const auto again = run_sweep(kSmallGrid, {.checkpoint = file.path});
  CHECK(again.resumed == full.records.size() - 1);
  CHECK(slurp(file.path) == text);
}

TEST_CASE("checkpoint: corrupt middle line stops the valid prefix") {
  TempFile file("corrupt.jsonl");
  const auto full = run_sweep(kSmallGrid);
  {
    std::ofstream out(file.path, std::ios::binary);
    out << record_to_jsonl(full.records[0]) << '\n' << record_to_jsonl(full.records[1]) << '\n';
    out << "{garbage\n" << record_to_jsonl(full.records[3]) << '\n';
  }
  const auto state = resume(file.path, kSmallGrid);
  CHECK(state.cursor == 2);
  CHECK(state.bad_line == std::optional<std::size_t>{3});
  const auto report = run_sweep(kSmallGrid, {.checkpoint = file.path});
  CHECK(report_to_jsonl(report) == report_to_jsonl(full));
  CHECK(slurp(file.path) == report_to_jsonl(full));
}

TEST_CASE("checkpoint: a record from another grid is rejected") {
  TempFile file("mismatch.jsonl");
  checkpoint_append(file.path, {SeedRecord{30, 1, 5, Verdict::kMatch, std::monostate{}, 0}});
  CHECK(error_code_of([&] { resume(file.path, kSmallGrid); }) == ErrorCode::kCheckpointMismatch);
  const auto fresh = run_sweep(kSmallGrid, {.checkpoint = file.path, .resume = false});
  CHECK(fresh.resumed == 0);
  CHECK(slurp(file.path) == report_to_jsonl(fresh));
}

TEST_CASE("timing fills ms only on request") {
  const auto report = sweep_uniqueness(5, {11, 12}, {1, 3}, {.timing = false});
  for (const auto& r : report.records) CHECK(r.ms == 0);
}
