#include "apsum/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "apsum/error.hpp"
#include "apsum/family.hpp"
#include "apsum/frobenius.hpp"
#include "apsum/ideal.hpp"
#include "apsum/semigroup.hpp"
#include "apsum/sweeps.hpp"
#include "apsum/tangent_cone.hpp"

#ifndef APSUM_VERSION
#define APSUM_VERSION "0.0.0"
#endif

namespace apsum::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SeedFlags {
  std::int64_t a = 0;
  std::int64_t d = 0;
  int m = 5;
};

struct OutputFlags {
  std::string format = "json";
  std::string out;
};

struct CommandResult {
  json payload = json::object();
  int exit_code = kExitOk;
  std::string csv_key;  // payload member exported by --format csv
};

json seed_json(const ArithmeticSeed& seed) {
  return json{{"a", seed.a()}, {"d", seed.d()}, {"m", seed.m()}};
}

json dimension_json(const std::optional<std::int64_t>& dim) {
  return dim ? json(*dim) : json(nullptr);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

bool all_of_kind(const json& arr, json::value_t kind) {
  if (!arr.is_array() || arr.empty()) return false;
  for (const auto& e : arr) {
    if (e.type() != kind) return false;
  }
  return true;
}

void render_grid(std::ostream& os, const std::vector<std::vector<std::string>>& cells, const std::string& indent) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += pad(row[c], widths[c]);
      if (c + 1 < row.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
}

// Human-readable view of the same payload the JSON format carries.
void render_table(std::ostream& os, const json& payload, const std::string& indent = "") {
  for (const auto& [key, value] : payload.items()) {
    if (all_of_kind(value, json::value_t::object)) {
      os << indent << key << ":\n";
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> header;
      for (const auto& [k, _] : value.front().items()) header.push_back(k);
      cells.push_back(header);
      for (const auto& rec : value) {
        std::vector<std::string> row;
        for (const auto& h : header) row.push_back(rec.contains(h) ? scalar_text(rec.at(h)) : "");
        cells.push_back(std::move(row));
      }
      render_grid(os, cells, indent + "  ");
    } else if (all_of_kind(value, json::value_t::array)) {
      os << indent << key << ":\n";
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : value) {
        std::vector<std::string> r;
        for (const auto& v : row) r.push_back(scalar_text(v));
        cells.push_back(std::move(r));
      }
      render_grid(os, cells, indent + "  ");
    } else if (value.is_object()) {
      os << indent << key << ":\n";
      render_table(os, value, indent + "  ");
    } else {
      os << indent << key << ": " << scalar_text(value) << '\n';
    }
  }
}

std::string csv_cell(const json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Matrices have no header row; record lists do.
void render_csv(std::ostream& os, const json& data) {
  if (all_of_kind(data, json::value_t::array)) {
    for (const auto& row : data) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
      os << '\n';
    }
    return;
  }
  if (all_of_kind(data, json::value_t::object)) {
    std::vector<std::string> header;
    for (const auto& [k, _] : data.front().items()) header.push_back(k);
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << '\n';
    for (const auto& rec : data) {
      for (std::size_t c = 0; c < header.size(); ++c) {
        os << (c ? "," : "") << (rec.contains(header[c]) ? csv_cell(rec.at(header[c])) : "");
      }
      os << '\n';
    }
    return;
  }
  if (data.is_array()) {
    os << "index,value\n";
    for (std::size_t i = 0; i < data.size(); ++i) os << i << ',' << csv_cell(data[i]) << '\n';
    return;
  }
  throw UsageError("csv output needs a list");
}

// ---- commands --------------------------------------------------------------

CommandResult cmd_info(const ArithmeticSeed& seed) {
  CommandResult r;
  const auto gens = partial_sum_generators(seed);
  const auto minimal = minimality_check(seed);
  r.payload["generators"] = std::vector<std::int64_t>(gens.values().begin(), gens.values().end());
  r.payload["q"] = seed.q();
  r.payload["r"] = seed.r();
  r.payload["minimal"] = {{"closedForm", minimal.closed_form ? json(*minimal.closed_form) : json(nullptr)},
                          {"oracle", minimal.oracle}};
  r.payload["frobenius"] = frobenius_oracle(gens);
  r.payload["type"] = pseudo_frobenius_oracle(gens).size();
  if (seed.m() == 5 && seed.a() >= kGamma5MinimalA) {
    r.payload["catalog"] = std::string(to_string(catalog_family(seed)));
  }
  return r;
}

CommandResult cmd_apery(const ArithmeticSeed& seed, bool oracle) {
  CommandResult r;
  r.csv_key = "records";
  if (oracle) {
    const auto gens = partial_sum_generators(seed);
    const auto ap = apery_oracle(gens, seed.a());
    json records = json::array();
    for (std::size_t i = 0; i < ap.size(); ++i) {
      records.push_back({{"residue", i}, {"value", ap[i]}, {"order", order_oracle(ap[i], gens)}});
    }
    r.payload["source"] = "oracle";
    r.payload["set"] = ap;
    r.payload["records"] = records;
    return r;
  }
  json records = json::array();
  for (const auto& rec : apery_gamma5(seed)) {
    std::string expansion;
    for (std::size_t i = 0; i < rec.expansion.size(); ++i) {
      expansion += (i ? " " : "") + std::to_string(rec.expansion[i]);
    }
    records.push_back({{"n", rec.n},
                       {"mu", rec.mu},
                       {"phi", rec.phi},
                       {"omega", rec.omega},
                       {"order", rec.order},
                       {"expansion", expansion}});
  }
  r.payload["source"] = "closedForm";
  r.payload["set"] = apery_set_gamma5(seed);
  r.payload["records"] = records;
  return r;
}

CommandResult cmd_frobenius(const ArithmeticSeed& seed) {
  CommandResult r;
  const auto closed = frobenius_gamma5(seed);
  const auto oracle = frobenius_oracle(partial_sum_generators(seed));
  r.payload["frobenius"] = closed;
  r.payload["pfMaximum"] = pf_gamma5(seed).frobenius;
  r.payload["oracle"] = oracle;
  r.payload["agree"] = closed == oracle;
  if (closed != oracle) r.exit_code = kExitVerification;
  return r;
}

CommandResult cmd_pf(const ArithmeticSeed& seed) {
  CommandResult r;
  const auto closed = pf_gamma5(seed);
  const auto oracle = pf_oracle(seed);
  r.csv_key = "pf";
  r.payload["source"] = std::string(to_string(closed.source));
  r.payload["pf"] = closed.pf;
  r.payload["residues"] = closed.residues;
  r.payload["type"] = closed.type_count;
  r.payload["frobenius"] = closed.frobenius;
  r.payload["oracle"] = {{"pf", oracle.pf}, {"type", oracle.type_count}, {"frobenius", oracle.frobenius}};
  r.payload["agree"] = closed.pf == oracle.pf;
  if (closed.pf != oracle.pf) r.exit_code = kExitVerification;
  return r;
}

CommandResult cmd_order(const ArithmeticSeed& seed, std::int64_t s) {
  CommandResult r;
  r.payload["s"] = s;
  r.payload["order"] = order_oracle(s, partial_sum_generators(seed));
  return r;
}

CatalogOptions catalog_options(const ArithmeticSeed& seed, const std::string& variant, const std::string& edition) {
  CatalogOptions o;
  if (variant == "auto") {
    o.variant = catalog_family(seed) == CatalogFamily::kT21 ? CatalogVariant::kAugmented : CatalogVariant::kStrict;
  } else {
    o.variant = variant == "strict" ? CatalogVariant::kStrict : CatalogVariant::kAugmented;
  }
  o.edition = edition == "printed" ? CatalogEdition::kAsPrinted : CatalogEdition::kCorrected;
  return o;
}

json binomial_json(const BinomialGenerator& b) {
  return json{{"label", b.label}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"text", format_binomial(b)}};
}

CommandResult cmd_ideal_list(const ArithmeticSeed& seed, const CatalogOptions& opts) {
  CommandResult r;
  r.csv_key = "generators";
  r.payload["family"] = std::string(to_string(catalog_family(seed)));
  r.payload["variant"] = std::string(to_string(opts.variant));
  r.payload["edition"] = std::string(to_string(opts.edition));
  json gens = json::array();
  for (const auto& b : generator_catalog(seed, opts)) gens.push_back(binomial_json(b));
  r.payload["generators"] = gens;
  // Listed in both editions; "applied" says whether the list above uses them.
  json fixes = json::array();
  for (const auto& c : catalog_corrections(seed, opts.variant)) {
    fixes.push_back({{"label", c.label},
                     {"printed", format_binomial(c.printed)},
                     {"corrected", format_binomial(c.corrected)},
                     {"applied", opts.edition == CatalogEdition::kCorrected}});
  }
  r.payload["corrections"] = fixes;
  return r;
}

CommandResult cmd_ideal_verify(const ArithmeticSeed& seed, const CatalogOptions& opts) {
  CommandResult r;
  r.csv_key = "dropOne";
  const auto catalog = generator_catalog(seed, opts);
  const auto report = gastinger_verify(catalog, seed);
  r.payload["family"] = std::string(to_string(catalog_family(seed)));
  r.payload["variant"] = std::string(to_string(opts.variant));
  r.payload["edition"] = std::string(to_string(opts.edition));
  r.payload["generatorCount"] = catalog.size();
  r.payload["target"] = report.target;
  r.payload["dimension"] = dimension_json(report.dimension);
  r.payload["homogeneous"] = report.homogeneous;
  r.payload["inhomogeneous"] = inhomogeneous_labels(catalog, seed);
  r.payload["pass"] = report.pass;
  r.payload["minimal"] = report.minimal;
  json drops = json::array();
  for (const auto& d : report.drop_one) drops.push_back({{"label", d.label}, {"dimension", dimension_json(d.dimension)}});
  r.payload["dropOne"] = drops;
  if (catalog_family(seed) == CatalogFamily::kT21) {
    const auto adj = adjudicate_t21(seed, opts.edition);
    r.payload["adjudication"] = {{"strictPass", adj.strict.pass},
                                 {"augmentedPass", adj.augmented.pass},
                                 {"passing", adj.passing ? json(std::string(to_string(*adj.passing))) : json(nullptr)}};
  }
  if (!report.pass || !report.minimal) r.exit_code = kExitVerification;
  return r;
}

CommandResult cmd_table(const ArithmeticSeed& seed) {
  CommandResult r;
  r.csv_key = "rows";
  r.payload["rows"] = apery_table(seed).rows;
  return r;
}

CommandResult cmd_cone(const ArithmeticSeed& seed) {
  CommandResult r;
  r.csv_key = "columns";
  const auto table = apery_table(seed);
  const auto cone = cone_decomposition(seed, table);
  const auto ladders = landings(table);
  const auto props = ring_properties(seed);
  r.payload = json::parse(cone_to_json(table, cone), nullptr, true, false);
  r.payload["tCountsClosedForm"] = t_counts_closed_form(seed);
  json torsion = json::array();
  for (const auto& t : cone.torsion) torsion.push_back({{"shift", t.shift}, {"length", t.length}});
  r.payload["torsion"] = torsion;
  r.payload["reductionNumber"]["agree"] = cone.reduction.agree();
  r.payload["analyticSpread"] = ConeDecomposition::kAnalyticSpread;
  r.payload["ringProperties"] = {{"cohenMacaulay", props.cohen_macaulay},
                                 {"gorenstein", props.gorenstein},
                                 {"buchsbaum", std::string(to_string(props.buchsbaum))},
                                 {"type", props.type}};
  json columns = json::array();
  for (std::size_t t = 0; t < ladders.columns.size(); ++t) {
    const auto& col = ladders.columns[t];
    columns.push_back({{"column", t},
                       {"omega", table.rows[0][t]},
                       {"order", table.orders[t]},
                       {"landings", col.landings.size()},
                       {"p", col.p},
                       {"d", col.d},
                       {"freeShaped", t == 0 || col.free_shaped()}});
  }
  r.payload["columns"] = columns;
  return r;
}

CommandResult cmd_hilbert(const ArithmeticSeed& seed) {
  CommandResult r;
  r.csv_key = "terms";
  const auto num = hilbert_numerator(seed);
  std::string text;
  json terms = json::array();
  for (std::size_t k = 0; k < num.size(); ++k) {
    terms.push_back({{"k", k}, {"coefficient", num[k]}});
    if (num[k] == 0) continue;
    if (!text.empty()) text += " + ";
    if (k == 0 || num[k] != 1) text += std::to_string(num[k]);
    if (k >= 1) text += "x";
    if (k >= 2) text += "^" + std::to_string(k);
  }
  r.payload["numerator"] = num;
  r.payload["denominator"] = "1 - x";
  r.payload["series"] = "(" + text + ")/(1 - x)";
  r.payload["terms"] = terms;
  return r;
}

// ---- output -----------------------------------------------------------------

class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit(std::ostream& fallback, const OutputFlags& flags, const std::string& command, const ArithmeticSeed& seed,
          const CommandResult& result) {
  Sink sink(fallback, flags.out);
  auto& os = sink.get();
  if (flags.format == "json") {
    json envelope{{"command", command},
                  {"seed", seed_json(seed)},
                  {"payload", result.payload},
                  {"toolVersion", APSUM_VERSION},
                  {"schemaVersion", kSchemaVersion}};
    os << envelope.dump(2) << '\n';
  } else if (flags.format == "csv") {
    if (result.csv_key.empty()) throw UsageError(command + " has no csv export");
    render_csv(os, result.payload.at(result.csv_key));
  } else {
    os << command << "  a=" << seed.a() << " d=" << seed.d() << " m=" << seed.m() << '\n';
    render_table(os, result.payload);
  }
}

json sweep_record_json(const SeedRecord& rec) {
  return json::parse(record_to_jsonl(rec));
}

void emit_sweep(std::ostream& fallback, std::ostream& err, const OutputFlags& flags, const SweepReport& report) {
  Sink sink(fallback, flags.out);
  auto& os = sink.get();
  if (flags.format == "json") {
    os << report_to_jsonl(report);
  } else {
    json records = json::array();
    for (const auto& rec : report.records) {
      auto j = sweep_record_json(rec);
      json row{{"a", j["a"]}, {"d", j["d"]}, {"m", j["m"]}, {"verdict", j["verdict"]},
               {"witness", j.contains("witness") ? j["witness"].dump() : std::string()}, {"ms", j["ms"]}};
      records.push_back(row);
    }
    if (flags.format == "csv") {
      render_csv(os, records);
    } else {
      render_table(os, json{{"records", records}});
    }
  }
  const std::size_t evaluated = report.records.size() - report.skipped;
  err << report.records.size() << " seeds, " << evaluated << " evaluated, " << report.skipped << " skipped, "
      << report.counterexamples.size() << " counterexamples, " << report.resumed << " resumed from checkpoint\n";
}

unsigned default_jobs() {
  if (const char* env = std::getenv("APSUM_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::kTCountMismatch ? kExitVerification : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Apery sets, Frobenius data, defining ideals and tangent cones of partial-sum semigroups", "apsum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", APSUM_VERSION);

  SeedFlags seed_flags;
  OutputFlags output;
  std::string command_name;
  std::function<CommandResult(const ArithmeticSeed&)> action;

  auto add_common = [&](CLI::App* sub, int default_m) {
    seed_flags.m = default_m;
    sub->add_option("--a", seed_flags.a, "multiplicity a")->required();
    sub->add_option("--d", seed_flags.d, "common difference d")->required();
    sub->add_option("--m", seed_flags.m, "embedding dimension m")->capture_default_str();
    sub->add_option("--format", output.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    sub->add_option("--out", output.out, "write to this file instead of stdout");
  };
  auto bind = [&](CLI::App* sub, std::string name, std::function<CommandResult(const ArithmeticSeed&)> fn) {
    sub->callback([&, name = std::move(name), fn = std::move(fn)]() {
      command_name = name;
      action = fn;
    });
  };

  auto* info = app.add_subcommand("info", "generators, minimality, Frobenius number and type");
  add_common(info, 5);
  bind(info, "info", cmd_info);

  bool use_oracle = false;
  auto* apery = app.add_subcommand("apery", "Apery set with respect to a");
  add_common(apery, 5);
  apery->add_flag("--oracle", use_oracle, "brute-force sieve instead of the closed form");
  bind(apery, "apery", [&](const ArithmeticSeed& s) { return cmd_apery(s, use_oracle); });

  auto* frob = app.add_subcommand("frobenius", "Frobenius number, closed form against the oracle");
  add_common(frob, 5);
  bind(frob, "frobenius", cmd_frobenius);

  auto* pf = app.add_subcommand("pf", "pseudo-Frobenius set and type");
  add_common(pf, 5);
  bind(pf, "pf", cmd_pf);

  std::int64_t element = 0;
  auto* order = app.add_subcommand("order", "order of an element s");
  add_common(order, 5);
  order->add_option("--s", element, "semigroup element")->required();
  bind(order, "order", [&](const ArithmeticSeed& s) { return cmd_order(s, element); });

  std::string variant = "auto";
  std::string edition = "printed";
  auto* ideal = app.add_subcommand("ideal", "defining-ideal generator catalogs");
  ideal->require_subcommand(1);
  auto add_catalog_flags = [&](CLI::App* sub) {
    sub->add_option("--variant", variant, "auto, strict or augmented")
        ->check(CLI::IsMember({"auto", "strict", "augmented"}))
        ->capture_default_str();
    sub->add_option("--edition", edition, "printed or corrected")
        ->check(CLI::IsMember({"printed", "corrected"}))
        ->capture_default_str();
  };
  auto* ideal_list = ideal->add_subcommand("list", "list the generator catalog");
  add_common(ideal_list, 5);
  add_catalog_flags(ideal_list);
  bind(ideal_list, "ideal list",
       [&](const ArithmeticSeed& s) { return cmd_ideal_list(s, catalog_options(s, variant, edition)); });
  auto* ideal_verify = ideal->add_subcommand("verify", "Gastinger dimension and drop-one minimality");
  add_common(ideal_verify, 5);
  add_catalog_flags(ideal_verify);
  bind(ideal_verify, "ideal verify",
       [&](const ArithmeticSeed& s) { return cmd_ideal_verify(s, catalog_options(s, variant, edition)); });

  auto* table = app.add_subcommand("table", "Apery table, rows 0..max order");
  add_common(table, 5);
  bind(table, "table", cmd_table);

  auto* cone = app.add_subcommand("cone", "tangent cone decomposition and ring properties");
  add_common(cone, 5);
  bind(cone, "cone", cmd_cone);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the tangent cone");
  add_common(hilbert, 5);
  bind(hilbert, "hilbert", cmd_hilbert);

  // Sweeps take ranges and write JSONL.
  std::string a_range;
  std::string d_range;
  int sweep_m = 5;
  unsigned jobs = default_jobs();
  std::string checkpoint;
  bool timing = false;
  bool no_resume = false;
  std::optional<SweepKind> sweep_kind;
  auto* sweep = app.add_subcommand("sweep", "conjecture sweeps over (a, d) grids");
  sweep->require_subcommand(1);
  auto add_sweep_flags = [&](CLI::App* sub) {
    sub->add_option("--a", a_range, "a range, lo..hi")->required();
    sub->add_option("--d", d_range, "d range, lo..hi")->required();
    sub->add_option("--jobs", jobs, "worker threads (env APSUM_JOBS)")->check(CLI::PositiveNumber);
    sub->add_option("--checkpoint", checkpoint, "append-only JSONL checkpoint to write and resume from");
    sub->add_flag("--no-resume", no_resume, "start the checkpoint over");
    sub->add_flag("--timing", timing, "record per-seed milliseconds");
    sub->add_option("--format", output.format, "json (JSONL), csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    sub->add_option("--out", output.out, "write to this file instead of stdout");
  };
  auto* sweep_unique = sweep->add_subcommand("unique", "uniqueness of Apery expansions in Gamma_m");
  add_sweep_flags(sweep_unique);
  sweep_unique->add_option("--m", sweep_m, "embedding dimension m")->capture_default_str();
  sweep_unique->callback([&]() { sweep_kind = SweepKind::kUniqueness; });
  auto* sweep_g6 = sweep->add_subcommand("gamma6", "conjectured Gamma_6 Apery formula against the oracle");
  add_sweep_flags(sweep_g6);
  sweep_g6->callback([&]() { sweep_kind = SweepKind::kGamma6; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    app.exit(e, help_out, help_err);
    err << help_err.str() << help_out.str();
    return kExitUsage;
  }

  try {
    if (sweep_kind) {
      SweepGrid grid{*sweep_kind, *sweep_kind == SweepKind::kGamma6 ? 6 : sweep_m, parse_range(a_range),
                     parse_range(d_range)};
      SweepOptions opts;
      opts.jobs = jobs;
      opts.timing = timing;
      opts.resume = !no_resume;
      if (!checkpoint.empty()) opts.checkpoint = checkpoint;
      emit_sweep(out, err, output, run_sweep(grid, opts));
      return kExitOk;
    }
    const auto seed = ArithmeticSeed::make(seed_flags.a, seed_flags.d, seed_flags.m);
    const auto result = action(seed);
    emit(out, output, command_name, seed, result);
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace apsum::cli
