#include "apsum/sweeps.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "apsum/error.hpp"
#include "apsum/family.hpp"
#include "apsum/semigroup.hpp"

namespace apsum {

namespace {

using ojson = nlohmann::ordered_json;

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

void validate(const SweepGrid& grid) {
  if (grid.m < 2) throw std::invalid_argument("sweep needs m >= 2");
  if (grid.a.empty() || grid.d.empty()) throw std::invalid_argument("sweep ranges must be nonempty");
  if (grid.a.lo < 2 || grid.d.lo < 1) throw std::invalid_argument("sweep needs a >= 2 and d >= 1");
  if (grid.kind == SweepKind::kGamma6 && grid.m != 6) throw std::invalid_argument("gamma6 sweep needs m = 6");
}

ojson witness_json(const Witness& w) {
  if (const auto* u = std::get_if<UniquenessWitness>(&w)) {
    return ojson{{"element", u->element},
                 {"count", u->count},
                 {"expansions", u->expansions},
                 {"violationCount", u->violation_count}};
  }
  if (const auto* g = std::get_if<Gamma6Witness>(&w)) {
    return ojson{{"n", g->n}, {"conjectured", g->conjectured}, {"oracle", g->oracle}, {"mismatchCount", g->mismatch_count}};
  }
  return nullptr;
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.empty()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kMatch: return "match";
    case Verdict::kMismatch: return "mismatch";
    case Verdict::kViolation: return "violation";
    case Verdict::kSkip: return "skip";
  }
  return "skip";
}

std::optional<Verdict> parse_verdict(std::string_view text) noexcept {
  for (auto v : {Verdict::kMatch, Verdict::kMismatch, Verdict::kViolation, Verdict::kSkip}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

std::vector<std::pair<std::int64_t, std::int64_t>> grid_seeds(const SweepGrid& grid) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto a = grid.a.lo; a <= grid.a.hi; ++a) {
    for (auto d = grid.d.lo; d <= grid.d.hi; ++d) out.emplace_back(a, d);
  }
  return out;
}

SeedRecord evaluate_seed(const SweepGrid& grid, std::int64_t a, std::int64_t d, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  SeedRecord rec{a, d, grid.m, Verdict::kSkip, {}, 0};
  auto finish = [&]() {
    if (timing) {
      rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    return rec;
  };
  if (std::gcd(a, d) != 1) return finish();
  const auto seed = ArithmeticSeed::make(a, d, grid.m);
  const auto gens = partial_sum_generators(seed);
  if (!is_minimally_generated(gens.values())) return finish();

  if (grid.kind == SweepKind::kUniqueness) {
    const auto report = uniqueness_check(gens, a);
    if (report.all_unique) {
      rec.verdict = Verdict::kMatch;
    } else {
      const auto& first = report.violations.front();
      rec.verdict = Verdict::kViolation;
      rec.witness = UniquenessWitness{first.element, first.count, first.expansions,
                                      static_cast<std::int64_t>(report.violations.size())};
    }
    return finish();
  }

  const auto conjectured = apery_gamma6_conjectured(seed);
  const auto oracle = apery_oracle(gens, a);
  Gamma6Witness w;
  for (std::int64_t n = 1; n < a; ++n) {
    const auto expected = oracle[static_cast<std::size_t>((n * d) % a)];
    const auto claimed = conjectured[static_cast<std::size_t>(n)];
    if (claimed != expected) {
      if (w.mismatch_count == 0) w = {n, claimed, expected, 0};
      ++w.mismatch_count;
    }
  }
  if (w.mismatch_count == 0) {
    rec.verdict = Verdict::kMatch;
  } else {
    rec.verdict = Verdict::kMismatch;
    rec.witness = w;
  }
  return finish();
}

std::string record_to_jsonl(const SeedRecord& record) {
  ojson j{{"a", record.a}, {"d", record.d}, {"m", record.m}, {"verdict", to_string(record.verdict)}};
  if (!std::holds_alternative<std::monostate>(record.witness)) j["witness"] = witness_json(record.witness);
  j["ms"] = record.ms;
  return j.dump();
}

SeedRecord record_from_jsonl(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    SeedRecord rec;
    rec.a = j.at("a").get<std::int64_t>();
    rec.d = j.at("d").get<std::int64_t>();
    rec.m = j.at("m").get<int>();
    rec.ms = j.at("ms").get<std::int64_t>();
    const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!verdict) throw std::invalid_argument("unknown verdict");
    rec.verdict = *verdict;
    if (j.contains("witness")) {
      const auto& w = j.at("witness");
      if (w.contains("element")) {
        rec.witness = UniquenessWitness{w.at("element").get<std::int64_t>(), w.at("count").get<std::int64_t>(),
                                        w.at("expansions").get<std::vector<std::vector<std::int64_t>>>(),
                                        w.at("violationCount").get<std::int64_t>()};
      } else {
        rec.witness = Gamma6Witness{w.at("n").get<std::int64_t>(), w.at("conjectured").get<std::int64_t>(),
                                    w.at("oracle").get<std::int64_t>(), w.at("mismatchCount").get<std::int64_t>()};
      }
    }
    const bool needs_witness = rec.verdict == Verdict::kViolation || rec.verdict == Verdict::kMismatch;
    if (needs_witness == std::holds_alternative<std::monostate>(rec.witness)) {
      throw std::invalid_argument("witness must be present iff the verdict is a violation or mismatch");
    }
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed sweep record: ") + e.what());
  }
}

ResumeState resume(const std::filesystem::path& path, const SweepGrid& grid) {
  ResumeState state;
  std::ifstream in(path, std::ios::binary);
  if (!in) return state;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto seeds = grid_seeds(grid);

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    const auto nl = text.find('\n', pos);
    if (nl == std::string::npos) {  // truncated final line
      state.bad_line = line_no;
      break;
    }
    SeedRecord rec;
    try {
      rec = record_from_jsonl(std::string_view(text).substr(pos, nl - pos));
    } catch (const std::invalid_argument&) {
      state.bad_line = line_no;
      break;
    }
    if (state.cursor >= seeds.size() || seeds[state.cursor] != std::pair{rec.a, rec.d} || rec.m != grid.m) {
      throw Error(ErrorCode::kCheckpointMismatch,
                  "line " + std::to_string(line_no) + " of " + path.string() + " does not match the grid");
    }
    state.records.push_back(std::move(rec));
    ++state.cursor;
    pos = nl + 1;
    state.valid_bytes = pos;
  }
  return state;
}

void checkpoint_append(const std::filesystem::path& path, const std::vector<SeedRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot open checkpoint " + path.string());
  for (const auto& r : records) out << record_to_jsonl(r) << '\n';
}

SweepReport run_sweep(const SweepGrid& grid, const SweepOptions& options) {
  validate(grid);
  const auto start = std::chrono::steady_clock::now();
  const auto seeds = grid_seeds(grid);
  SweepReport report;
  report.grid = grid;

  std::ofstream sink;
  if (options.checkpoint) {
    const auto& path = *options.checkpoint;
    if (options.resume && std::filesystem::exists(path)) {
      auto state = resume(path, grid);
      std::filesystem::resize_file(path, state.valid_bytes);
      report.records = std::move(state.records);
      report.resumed = report.records.size();
    } else {
      std::ofstream(path, std::ios::binary | std::ios::trunc);
    }
    sink.open(path, std::ios::binary | std::ios::app);
    if (!sink) throw std::runtime_error("cannot open checkpoint " + path.string());
  }

  const std::size_t first = report.records.size();
  const std::size_t pending = seeds.size() - first;
  std::vector<std::optional<SeedRecord>> slots(pending);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::exception_ptr failure;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending) return;
      std::optional<SeedRecord> rec;
      try {
        const auto [a, d] = seeds[first + i];
        rec = evaluate_seed(grid, a, d, options.timing);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(pending);
      }
      std::lock_guard lock(mu);
      slots[i] = std::move(rec);
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(pending, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  // Single in-order writer: the checkpoint always holds a prefix of the grid.
  for (std::size_t i = 0; i < pending; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return slots[i].has_value() || failure; });
    if (failure) break;
    SeedRecord rec = std::move(*slots[i]);
    lock.unlock();
    if (sink.is_open()) sink << record_to_jsonl(rec) << '\n' << std::flush;
    report.records.push_back(std::move(rec));
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto v = report.records[i].verdict;
    if (v == Verdict::kSkip) ++report.skipped;
    if (v == Verdict::kViolation || v == Verdict::kMismatch) report.counterexamples.push_back(i);
  }
  report.cursor = report.records.size();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SweepReport sweep_uniqueness(int m, IntRange a, IntRange d, const SweepOptions& options) {
  return run_sweep({SweepKind::kUniqueness, m, a, d}, options);
}

SweepReport sweep_gamma6(IntRange a, IntRange d, const SweepOptions& options) {
  return run_sweep({SweepKind::kGamma6, 6, a, d}, options);
}

std::string report_to_jsonl(const SweepReport& report) {
  std::string out;
  for (const auto& r : report.records) {
    out += record_to_jsonl(r);
    out += '\n';
  }
  return out;
}

}  // namespace apsum
