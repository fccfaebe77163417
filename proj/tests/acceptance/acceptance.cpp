// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Usage: acceptance [artifact-dir]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apsum/error.hpp"
#include "apsum/family.hpp"
#include "apsum/frobenius.hpp"
#include "apsum/ideal.hpp"
#include "apsum/semigroup.hpp"
#include "apsum/sweeps.hpp"
#include "apsum/tangent_cone.hpp"

using namespace apsum;
namespace fs = std::filesystem;

namespace {

using Row = std::vector<std::int64_t>;
using Seeds = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> notes;     // printed after the verdict line
  std::size_t failures = 0;

  void fail(const std::string& what) {
    pass = false;
    if (++failures <= 12) notes.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

Seeds coprime(std::int64_t a_lo, std::int64_t a_hi, std::int64_t d_lo, std::int64_t d_hi) {
  Seeds out;
  for (auto a = a_lo; a <= a_hi; ++a) {
    for (auto d = d_lo; d <= d_hi; ++d) {
      if (std::gcd(a, d) == 1) out.emplace_back(a, d);
    }
  }
  return out;
}

std::string seed_str(std::int64_t a, std::int64_t d) {
  return "(" + std::to_string(a) + "," + std::to_string(d) + ")";
}

std::string join(const Row& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string dim_str(const std::optional<std::int64_t>& d) { return d ? std::to_string(*d) : "infinite"; }

// Criterion 1: (11,2) Apery set and the four printed table rows.
Outcome golden(const fs::path&) {
  Outcome o;
  const auto seed = ArithmeticSeed::make(11, 2);
  const Row set{0, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75};
  const std::vector<Row> printed{{0, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75},
                                 {11, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75},
                                 {22, 35, 48, 50, 63, 87, 67, 91, 104, 95, 86},
                                 {33, 46, 59, 61, 74, 98, 78, 91, 104, 106, 97}};
  if (apery_set_gamma5(seed) != set) o.fail("Apery set " + join(apery_set_gamma5(seed)));
  const auto table = apery_table(seed);
  ++o.checked;
  if (table.rows.size() != printed.size()) {
    o.fail("table has " + std::to_string(table.rows.size()) + " rows, expected 4");
    return o;
  }
  for (std::size_t s = 0; s < printed.size(); ++s) {
    for (std::size_t t = 0; t < printed[s].size(); ++t) {
      ++o.checked;
      if (table.rows[s][t] != printed[s][t]) {
        o.fail("row " + std::to_string(s) + " column " + std::to_string(t) + ": computed " +
               std::to_string(table.rows[s][t]) + ", printed " + std::to_string(printed[s][t]));
      }
    }
  }
  return o;
}

// Criterion 2: closed-form Apery set against the sieve oracle.
Outcome apery_closed_form(const fs::path&) {
  Outcome o;
  for (const auto& [a, d] : coprime(11, 120, 1, 15)) {
    ++o.checked;
    const auto seed = ArithmeticSeed::make(a, d);
    const auto closed = apery_set_gamma5(seed);
    const auto oracle = apery_oracle(partial_sum_generators(seed), a);
    for (std::int64_t n = 0; n < a; ++n) {
      if (oracle[static_cast<std::size_t>((n * d) % a)] != closed[static_cast<std::size_t>(n)]) {
        o.fail(seed_str(a, d) + " class n=" + std::to_string(n));
        break;
      }
    }
  }
  return o;
}

// Criterion 3: PF sets and Frobenius numbers against the oracle.
Outcome pf_frobenius(const fs::path&) {
  Outcome o;
  std::size_t pf_bad = 0;
  std::size_t frob_bad = 0;
  for (const auto& [a, d] : coprime(11, 60, 1, 12)) {
    ++o.checked;
    const auto seed = ArithmeticSeed::make(a, d);
    const auto closed = pf_gamma5(seed);
    const auto oracle = pf_oracle(seed);
    if (closed.pf != oracle.pf) {
      ++pf_bad;
      o.fail(seed_str(a, d) + " PF closed form " + join(closed.pf) + " vs oracle " + join(oracle.pf));
    }
    const auto f = frobenius_gamma5(seed);
    const auto fo = frobenius_oracle(partial_sum_generators(seed));
    if (f != fo) {
      ++frob_bad;
      o.fail(seed_str(a, d) + " Frobenius closed form " + std::to_string(f) + " vs oracle " + std::to_string(fo));
    }
  }
  o.note(std::to_string(pf_bad) + " PF mismatches, " + std::to_string(frob_bad) + " Frobenius mismatches");
  return o;
}

// Criterion 4: Gastinger dimension and drop-one minimality of the catalogs.
Outcome gastinger(const fs::path& dir) {
  Outcome o;
  std::ofstream out(dir / "gastinger.csv");
  out << "a,d,family,edition,variant,dimension,pass,minimal\n";
  std::size_t corrected_pass = 0;
  std::size_t total = 0;
  for (const auto& [a, d] : coprime(11, 60, 1, 10)) {
    ++o.checked;
    ++total;
    const auto seed = ArithmeticSeed::make(a, d);
    const auto family = catalog_family(seed);
    GastingerReport report;
    std::string variant = "strict";
    if (family == CatalogFamily::kT21) {
      const auto adj = adjudicate_t21(seed);
      variant = adj.passing ? std::string(to_string(*adj.passing)) : "none";
      report = adj.passing == CatalogVariant::kStrict ? adj.strict : adj.augmented;
      o.note(seed_str(a, d) + " adjudication: strict dimension " + dim_str(adj.strict.dimension) +
             ", augmented dimension " + dim_str(adj.augmented.dimension) + ", passing variant " + variant);
    } else {
      report = gastinger_verify(seed);
    }
    out << a << ',' << d << ',' << to_string(family) << ",printed," << variant << ',' << dim_str(report.dimension)
        << ',' << report.pass << ',' << report.minimal << '\n';
    if (!report.pass || !report.minimal) {
      std::string why = "dimension " + dim_str(report.dimension);
      const auto used = variant == "augmented" ? CatalogVariant::kAugmented : CatalogVariant::kStrict;
      const auto bad = inhomogeneous_labels(generator_catalog(seed, {used}), seed);
      for (const auto& l : bad) why += ", " + l + " not homogeneous";
      o.fail(seed_str(a, d) + " " + why);
    }
    const CatalogOptions corrected{family == CatalogFamily::kT21 ? CatalogVariant::kAugmented
                                                                 : CatalogVariant::kStrict,
                                   CatalogEdition::kCorrected};
    const auto fixed = gastinger_verify(seed, corrected);
    corrected_pass += fixed.pass && fixed.minimal;
    out << a << ',' << d << ',' << to_string(family) << ",corrected," << to_string(corrected.variant) << ','
        << dim_str(fixed.dimension) << ',' << fixed.pass << ',' << fixed.minimal << '\n';
  }
  o.note("supplementary: corrected edition passes and is minimal on " + std::to_string(corrected_pass) + "/" +
         std::to_string(total) + " seeds");
  o.note("per-seed results in " + (dir / "gastinger.csv").string());
  return o;
}

// Criterion 5: order histogram.
Outcome order_histogram(const fs::path&) {
  Outcome o;
  for (const auto& [a, d] : coprime(11, 60, 1, 12)) {
    ++o.checked;
    const auto seed = ArithmeticSeed::make(a, d);
    const auto direct = t_counts_direct(apery_table(seed));
    const auto closed = t_counts_closed_form(seed);
    if (direct != closed) o.fail(seed_str(a, d) + " direct " + join(direct) + " closed form " + join(closed));
    if (std::accumulate(direct.begin(), direct.end(), std::int64_t{0}) != a) o.fail(seed_str(a, d) + " sum != a");
    if (direct.size() < 2 || direct[0] != 1 || direct[1] != 4) o.fail(seed_str(a, d) + " t0/t1 " + join(direct));
  }
  return o;
}

// Criterion 6: freeness, Gorenstein flag, Hilbert numerator.
Outcome cone_freeness(const fs::path&) {
  Outcome o;
  std::int64_t min_type = 1 << 30;
  for (const auto& [a, d] : coprime(11, 60, 1, 12)) {
    ++o.checked;
    const auto seed = ArithmeticSeed::make(a, d);
    const auto table = apery_table(seed);
    const auto analysis = landings(table);
    for (std::size_t t = 1; t < analysis.columns.size(); ++t) {
      for (const auto& l : analysis.columns[t].landings) {
        if (l.is_true()) o.fail(seed_str(a, d) + " true landing in column " + std::to_string(t));
      }
    }
    const auto props = ring_properties(seed);
    min_type = std::min(min_type, props.type);
    if (!props.cohen_macaulay) o.fail(seed_str(a, d) + " not Cohen-Macaulay");
    if (props.gorenstein || props.type < 4) o.fail(seed_str(a, d) + " type " + std::to_string(props.type));
    if (hilbert_numerator(seed) != t_counts_direct(table)) o.fail(seed_str(a, d) + " Hilbert numerator");
  }
  o.note("smallest type on the grid: " + std::to_string(min_type));
  return o;
}

// Criterion 7: reduction number and its discrepancy set.
Outcome reduction(const fs::path& dir) {
  Outcome o;
  std::ofstream out(dir / "reduction_discrepancies.csv");
  out << "a,d,formula,computed,tCounts\n";
  std::size_t disagreements = 0;
  for (const auto& [a, d] : coprime(11, 60, 1, 12)) {
    ++o.checked;
    const auto seed = ArithmeticSeed::make(a, d);
    const auto table = apery_table(seed);
    const auto rn = reduction_number(seed);
    const auto& orders = table.orders;
    const auto max_order = *std::max_element(orders.begin(), orders.end());
    if (rn.computed != max_order) o.fail(seed_str(a, d) + " computed != max order");
    const auto t = t_counts_closed_form(seed);
    const auto q = static_cast<std::size_t>(seed.q());
    const bool predicted = t.size() > q + 2 && t[q + 2] > 0;
    if (!rn.agree()) {
      ++disagreements;
      out << a << ',' << d << ',' << rn.formula << ',' << rn.computed << ",\"" << join(t) << "\"\n";
    }
    if (predicted == rn.agree()) {
      o.fail(seed_str(a, d) + " formula " + std::to_string(rn.formula) + " computed " +
             std::to_string(rn.computed) + " t " + join(t));
    }
  }
  const auto r112 = reduction_number(ArithmeticSeed::make(11, 2));
  if (r112.formula != 2 || r112.computed != 3) o.fail("(11,2) reduction number");
  o.note(std::to_string(disagreements) + " seeds where the formula differs, listed in " +
         (dir / "reduction_discrepancies.csv").string());
  return o;
}

// Criterion 8: conjecture harness.
Outcome harness(const fs::path& dir) {
  Outcome o;
  const auto u5 = sweep_uniqueness(5, {11, 40}, {1, 10}, {.jobs = 4});
  o.checked += u5.records.size();
  if (!u5.counterexamples.empty()) o.fail("m=5 uniqueness: " + std::to_string(u5.counterexamples.size()) + " violations");
  o.note("m=5 uniqueness over 11..40 x 1..10: " + std::to_string(u5.counterexamples.size()) + " violations, " +
         std::to_string(u5.skipped) + " skipped");

  const auto run_twice = [&](const std::string& name, const std::function<SweepReport(unsigned)>& sweep) {
    const auto serial = sweep(1);
    const auto parallel = sweep(4);
    const auto text = report_to_jsonl(serial);
    o.checked += serial.records.size();
    if (text != report_to_jsonl(parallel)) o.fail(name + " is not deterministic across job counts");
    std::ofstream(dir / (name + ".jsonl"), std::ios::binary) << text;
    o.note(name + ": " + std::to_string(serial.records.size()) + " seeds, " +
           std::to_string(serial.counterexamples.size()) + " counterexamples (recorded, not gated), report " +
           (dir / (name + ".jsonl")).string());
  };
  run_twice("uniqueness_m6", [](unsigned j) { return sweep_uniqueness(6, {16, 50}, {1, 8}, {.jobs = j}); });
  run_twice("gamma6", [](unsigned j) { return sweep_gamma6({16, 60}, {1, 8}, {.jobs = j}); });
  return o;
}

// Criterion 9: property suites.
Outcome properties(const fs::path&) {
  Outcome o;
  const auto rel = nonpositive_relations(30, 30, 30);
  ++o.checked;
  if (rel != std::vector<std::array<std::int64_t, 4>>{{-2, 0, 2, 1}}) {
    o.fail("nonpositive relations: " + std::to_string(rel.size()) + " solutions");
  }

  std::size_t inhomogeneous = 0;
  for (const auto& [a, d] : coprime(11, 60, 1, 10)) {
    const auto seed = ArithmeticSeed::make(a, d);
    const auto variant = catalog_family(seed) == CatalogFamily::kT21 ? CatalogVariant::kAugmented
                                                                     : CatalogVariant::kStrict;
    const auto cat = generator_catalog(seed, {variant});
    o.checked += cat.size();
    for (const auto& label : inhomogeneous_labels(cat, seed)) {
      ++inhomogeneous;
      o.fail("catalog " + seed_str(a, d) + " " + label + " not homogeneous");
    }
  }
  o.note(std::to_string(inhomogeneous) + " printed catalog binomials fail homogeneity");

  std::mt19937_64 rng(0xacce97);
  const auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> gens{uniform(2, 40)};
    const auto size = uniform(2, 5);
    while (static_cast<std::int64_t>(gens.size()) < size) gens.push_back(gens.back() + uniform(1, 50));
    std::int64_t g = 0;
    for (auto v : gens) g = std::gcd(g, v);
    if (g != 1) continue;
    const auto list = GeneratorList::make(gens);
    const auto c = gens[static_cast<std::size_t>(uniform(0, size - 1))];
    const auto ap = apery_oracle(list, c);
    const SemigroupSieve sieve(gens, *std::max_element(ap.begin(), ap.end()) * 2);
    ++o.checked;
    for (std::int64_t i = 0; i < c; ++i) {
      const auto w = ap[static_cast<std::size_t>(i)];
      if (w % c != i || !sieve.contains(w) || (w >= c && sieve.contains(w - c))) {
        o.fail("residue coverage for " + join(gens) + " at c=" + std::to_string(c));
        break;
      }
    }
    for (int k = 0; k < 40; ++k) {
      const auto x = uniform(0, sieve.bound() / 2);
      const auto y = uniform(0, sieve.bound() / 2);
      const auto ox = sieve.order(x);
      const auto oy = sieve.order(y);
      if (!ox || !oy) continue;
      if (*sieve.order(x + y) < *ox + *oy) o.fail("superadditivity for " + join(gens));
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_artifacts");
  fs::create_directories(dir);

  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)(const fs::path&);
  };
  const Criterion criteria[] = {
      {1, "golden (11,2) Apery set and table", golden},
      {2, "closed-form Apery set vs oracle, 11<=a<=120, d<=15", apery_closed_form},
      {3, "PF sets and Frobenius numbers vs oracle, 11<=a<=60, d<=12", pf_frobenius},
      {4, "Gastinger dimension and drop-one minimality, 11<=a<=60, d<=10", gastinger},
      {5, "order histogram t_k", order_histogram},
      {6, "cone freeness, Gorenstein flag, Hilbert numerator", cone_freeness},
      {7, "reduction number and discrepancy set", reduction},
      {8, "conjecture harness", harness},
      {9, "property suites", properties},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(dir);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ["
              << o.checked << " checks, " << o.failures << " failures, " << timing << "]\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    if (o.failures > 12) std::cout << "    ... " << (o.failures - 12) << " more failures\n";
    failed += !o.pass;
  }
  std::cout << (9 - failed) << "/9 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
