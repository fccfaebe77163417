#include "apsum/tangent_cone.hpp"

#include <algorithm>

#include "json.hpp"

#include "apsum/error.hpp"
#include "apsum/frobenius.hpp"
#include "apsum/semigroup.hpp"

namespace apsum {

std::vector<std::int64_t> AperyTable::column(std::size_t t) const {
  std::vector<std::int64_t> out;
  out.reserve(rows.size() + 1);
  for (const auto& row : rows) out.push_back(row.at(t));
  out.push_back(guard.at(t));
  return out;
}

AperyTable apery_table(const ArithmeticSeed& seed) {
  AperyTable table;
  table.a = seed.a();
  const auto apery = apery_set_gamma5(seed);
  const auto gens = partial_sum_generators(seed);
  const std::int64_t top = *std::max_element(apery.begin(), apery.end());

  const SemigroupSieve small(gens.values(), top);
  int max_order = 0;
  for (auto w : apery) {
    const auto o = small.order(w);
    if (!o) throw Error(ErrorCode::kNotMember, std::to_string(w) + " is not in the semigroup");
    table.orders.push_back(*o);
    max_order = std::max(max_order, *o);
  }

  // Entries never exceed top + (R + 1) a.
  const SemigroupSieve sieve(gens.values(), top + static_cast<std::int64_t>(max_order + 1) * seed.a());
  std::vector<std::int64_t> row = apery;
  auto advance = [&](const std::vector<std::int64_t>& prev, int n) {
    std::vector<std::int64_t> next(prev.size());
    for (std::size_t t = 0; t < prev.size(); ++t) {
      const auto o = sieve.order(prev[t]);
      next[t] = (o && *o >= n + 1) ? prev[t] : prev[t] + seed.a();
    }
    return next;
  };
  table.rows.push_back(row);
  for (int n = 0; n < max_order; ++n) {
    row = advance(row, n);
    table.rows.push_back(row);
  }
  table.guard = advance(row, max_order);
  return table;
}

std::vector<Landing> ladder_landings(const std::vector<std::int64_t>& ladder) {
  std::vector<Landing> out;
  std::size_t i = 0;
  while (i < ladder.size()) {
    std::size_t j = i;
    while (j + 1 < ladder.size() && ladder[j + 1] == ladder[i]) ++j;
    if (j > i) out.push_back({static_cast<int>(i), static_cast<int>(j)});
    i = j + 1;
  }
  return out;
}

LadderAnalysis landings(const AperyTable& table) {
  LadderAnalysis out;
  const std::size_t width = table.rows.empty() ? 0 : table.rows.front().size();
  for (std::size_t t = 0; t < width; ++t) {
    ColumnLadder col;
    col.landings = ladder_landings(table.column(t));
    if (!col.landings.empty()) {
      col.p = static_cast<int>(col.landings.size()) - 1;
      col.d = col.landings.back().end;
      for (std::size_t j = 1; j < col.landings.size(); ++j) {
        const int prev_end = col.landings[j - 1].end;
        col.torsion.push_back({prev_end, col.landings[j].start - prev_end});
      }
    }
    if (t >= 1 && !col.free_shaped()) out.free = false;
    out.columns.push_back(std::move(col));
  }
  return out;
}

std::int64_t psi(std::int64_t k) {
  if (k == 2) return -1;
  if (k == 3) return 2;
  return 0;
}

std::vector<std::int64_t> t_counts_closed_form(const ArithmeticSeed& seed) {
  static constexpr std::int64_t kNext[10] = {5, 5, 6, 7, 8, 8, 8, 9, 9, 9};
  static constexpr std::int64_t kLast[10] = {0, 0, 0, 0, 0, 1, 2, 2, 3, 4};
  const std::int64_t q = seed.q();
  const std::int64_t r = seed.r();
  std::vector<std::int64_t> t{1, 4};
  for (std::int64_t k = 2; k <= q + 2; ++k) {
    std::int64_t base = 0;
    if (k < q) {
      base = 10;
    } else if (k == q) {
      base = r > 0 ? 10 : 9;
    } else if (k == q + 1) {
      base = kNext[r];
    } else {
      base = kLast[r];
    }
    t.push_back(base + psi(k));
  }
  while (t.size() > 1 && t.back() == 0) t.pop_back();
  return t;
}

std::vector<std::int64_t> t_counts_direct(const AperyTable& table) {
  const int top = *std::max_element(table.orders.begin(), table.orders.end());
  std::vector<std::int64_t> t(static_cast<std::size_t>(top) + 1, 0);
  for (int o : table.orders) ++t[static_cast<std::size_t>(o)];
  return t;
}

ConeDecomposition cone_decomposition(const ArithmeticSeed& seed, const AperyTable& table) {
  ConeDecomposition out;
  out.t_counts = t_counts_direct(table);
  const auto closed = t_counts_closed_form(seed);
  if (closed != out.t_counts) {
    std::string detail = "direct t_k differs from closed form at (a,d)=(" + std::to_string(seed.a()) + "," +
                         std::to_string(seed.d()) + ")";
    throw Error(ErrorCode::kTCountMismatch, detail);
  }
  const auto ladders = landings(table);
  out.free = ladders.free;
  out.shifts.push_back(0);
  for (std::size_t t = 1; t < ladders.columns.size(); ++t) {
    out.shifts.push_back(ladders.columns[t].d);
    for (const auto& ts : ladders.columns[t].torsion) out.torsion.push_back(ts);
  }
  std::sort(out.shifts.begin(), out.shifts.end());
  out.reduction.formula = seed.a() / 10 + 1;
  out.reduction.computed = table.top_row();
  return out;
}

ConeDecomposition cone_decomposition(const ArithmeticSeed& seed) {
  return cone_decomposition(seed, apery_table(seed));
}

ReductionNumber reduction_number(const ArithmeticSeed& seed) {
  const auto cone = cone_decomposition(seed);
  if (!cone.free) {
    throw Error(ErrorCode::kUnsupportedNonFreeCone, "the Apery table has a true landing");
  }
  return cone.reduction;
}

std::vector<std::int64_t> hilbert_numerator(const ArithmeticSeed& seed) {
  return cone_decomposition(seed).t_counts;
}

std::string_view to_string(Tristate value) noexcept {
  switch (value) {
    case Tristate::kFalse: return "false";
    case Tristate::kTrue: return "true";
    case Tristate::kNotDetermined: return "notDetermined";
  }
  return "notDetermined";
}

RingProperties ring_properties(const ArithmeticSeed& seed) {
  RingProperties out;
  out.cohen_macaulay = cone_decomposition(seed).free;
  out.type = static_cast<std::int64_t>(pf_oracle(seed).pf.size());
  out.gorenstein = out.cohen_macaulay && out.type == 1;
  out.buchsbaum = out.cohen_macaulay ? Tristate::kTrue : Tristate::kNotDetermined;
  return out;
}

std::string table_to_csv(const AperyTable& table) {
  std::string out;
  for (const auto& row : table.rows) {
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (t) out += ',';
      out += std::to_string(row[t]);
    }
    out += '\n';
  }
  return out;
}

std::string cone_to_json(const AperyTable& table, const ConeDecomposition& cone) {
  nlohmann::ordered_json j;
  j["rows"] = table.rows;
  j["tCounts"] = cone.t_counts;
  j["free"] = cone.free;
  j["shifts"] = cone.shifts;
  j["reductionNumber"] = {{"formula", cone.reduction.formula}, {"computed", cone.reduction.computed}};
  return j.dump();
}

}  // namespace apsum
