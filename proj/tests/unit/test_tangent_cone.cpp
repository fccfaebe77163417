#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "apsum/error.hpp"
#include "apsum/family.hpp"
#include "apsum/semigroup.hpp"
#include "apsum/tangent_cone.hpp"
#include "support/generators.hpp"

using namespace apsum;
using Row = std::vector<std::int64_t>;

namespace {

std::size_t column_of(const AperyTable& table, std::int64_t w) {
  const auto& row0 = table.rows.front();
  return static_cast<std::size_t>(std::find(row0.begin(), row0.end(), w) - row0.begin());
}

}  // namespace

TEST_CASE("(11,2) Apery table") {
  const auto table = apery_table(ArithmeticSeed::make(11, 2));
  REQUIRE(table.top_row() == 3);
  CHECK(table.rows[0] == Row{0, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75});
  CHECK(table.rows[1] == Row{11, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75});
  // Computed from the definition. The printed example has 91 in column 7 of
  // row 2 and 98 in column 5 of row 3; 80 = 24 + 56 and 87 = 2*24 + 39 already
  // lie in 2M and 3M.
  CHECK(table.rows[2] == Row{22, 35, 48, 50, 63, 87, 67, 80, 104, 95, 86});
  CHECK(table.rows[3] == Row{33, 46, 59, 61, 74, 87, 78, 91, 104, 106, 97});
  CHECK(table.orders == std::vector<int>{0, 1, 2, 1, 2, 3, 1, 2, 3, 2, 1});
}

TEST_CASE("property: Apery table invariants") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto seed = apsum::testing::random_seed(11, 60, 12);
    CAPTURE(seed.a());
    CAPTURE(seed.d());
    const auto table = apery_table(seed);
    const auto gens = partial_sum_generators(seed);
    auto row0 = table.rows[0];
    auto oracle = apery_oracle(gens, seed.a());
    std::sort(row0.begin(), row0.end());
    std::sort(oracle.begin(), oracle.end());
    CHECK(row0 == oracle);
    CHECK(table.rows[1][0] == seed.a());
    const SemigroupSieve sieve(gens.values(), table.guard.back() + table.guard.size() * seed.a());
    for (std::size_t s = 0; s + 1 < table.rows.size(); ++s) {
      for (std::size_t t = 0; t < table.rows[s].size(); ++t) {
        const auto step = table.rows[s + 1][t] - table.rows[s][t];
        CHECK((step == 0 || step == seed.a()));
        CHECK(*sieve.order(table.rows[s + 1][t]) >= static_cast<int>(s + 1));
      }
    }
    CHECK(table.top_row() == *std::max_element(table.orders.begin(), table.orders.end()));
  }
}

TEST_CASE("ladder landings") {
  CHECK(ladder_landings({0, 11, 22, 33, 44}).empty());
  const auto one = ladder_landings({104, 104, 104, 104, 115});
  REQUIRE(one.size() == 1);
  CHECK(one[0].start == 0);
  CHECK(one[0].end == 3);
  CHECK_FALSE(one[0].is_true());
  const auto two = ladder_landings({5, 5, 8, 9, 9, 9, 12});
  REQUIRE(two.size() == 2);
  CHECK(two[1].start == 3);
  CHECK(two[1].end == 5);
  CHECK(two[1].length() == 2);
  CHECK(two[1].is_true());
}

TEST_CASE("(11,2) ladders") {
  const auto table = apery_table(ArithmeticSeed::make(11, 2));
  const auto analysis = landings(table);
  CHECK(analysis.free);

  const auto& c104 = analysis.columns[column_of(table, 104)];
  REQUIRE(c104.landings.size() == 1);
  CHECK(c104.landings[0].start == 0);
  CHECK(c104.landings[0].end == 3);
  CHECK(c104.p == 0);
  CHECK(c104.d == 3);

  const auto& c48 = analysis.columns[column_of(table, 48)];
  CHECK(table.column(column_of(table, 48)) == Row{48, 48, 48, 59, 70});
  CHECK(c48.free_shaped());
  CHECK(c48.d == 2);

  const auto& c0 = analysis.columns[0];
  CHECK(c0.landings.empty());
  CHECK(c0.p == 0);
  CHECK(c0.d == 0);
}

TEST_CASE("t_k closed form") {
  CHECK(psi(2) == -1);
  CHECK(psi(3) == 2);
  CHECK(psi(4) == 0);
  CHECK(t_counts_closed_form(ArithmeticSeed::make(11, 2)) == Row{1, 4, 4, 2});
  CHECK(t_counts_closed_form(ArithmeticSeed::make(23, 1)) == Row{1, 4, 9, 9});
  CHECK(t_counts_closed_form(ArithmeticSeed::make(27, 4)) == Row{1, 4, 9, 11, 2});
  CHECK(t_counts_closed_form(ArithmeticSeed::make(29, 1)) == Row{1, 4, 9, 11, 4});
  CHECK(t_counts_closed_form(ArithmeticSeed::make(30, 7)) == Row{1, 4, 9, 11, 5});
}

TEST_CASE("cone decompositions") {
  const auto c112 = cone_decomposition(ArithmeticSeed::make(11, 2));
  CHECK(c112.free);
  CHECK(c112.t_counts == Row{1, 4, 4, 2});
  CHECK(c112.shifts == Row{0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3});
  CHECK(c112.torsion.empty());
  CHECK(ConeDecomposition::kAnalyticSpread == 1);

  const auto c231 = cone_decomposition(ArithmeticSeed::make(23, 1));
  CHECK(c231.free);
  CHECK(c231.t_counts == Row{1, 4, 9, 9});

  CHECK(hilbert_numerator(ArithmeticSeed::make(11, 2)) == Row{1, 4, 4, 2});
  CHECK(hilbert_numerator(ArithmeticSeed::make(23, 1)) == Row{1, 4, 9, 9});
}

TEST_CASE("reduction numbers") {
  const auto r112 = reduction_number(ArithmeticSeed::make(11, 2));
  CHECK(r112.formula == 2);
  CHECK(r112.computed == 3);
  CHECK_FALSE(r112.agree());
  const auto r203 = reduction_number(ArithmeticSeed::make(20, 3));
  CHECK(r203.formula == 3);
  CHECK(r203.computed == 3);
  const auto r231 = reduction_number(ArithmeticSeed::make(23, 1));
  CHECK(r231.formula == 3);
  CHECK(r231.computed == 3);
  CHECK(r231.agree());
}

TEST_CASE("ring properties") {
  const auto p112 = ring_properties(ArithmeticSeed::make(11, 2));
  CHECK(p112.cohen_macaulay);
  CHECK_FALSE(p112.gorenstein);
  CHECK(p112.buchsbaum == Tristate::kTrue);
  CHECK(p112.type == 4);
  const auto p231 = ring_properties(ArithmeticSeed::make(23, 1));
  CHECK_FALSE(p231.gorenstein);
  CHECK(p231.type == 9);
  CHECK(to_string(Tristate::kNotDetermined) == "notDetermined");
}

TEST_CASE("exports") {
  const auto seed = ArithmeticSeed::make(11, 2);
  const auto table = apery_table(seed);
  const auto csv = table_to_csv(table);
  CHECK(csv.rfind("0,24,48,39,63,87,56,80,104,95,75\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  const auto json = cone_to_json(table, cone_decomposition(seed, table));
  CHECK(json.find("\"tCounts\":[1,4,4,2]") != std::string::npos);
  CHECK(json.find("\"reductionNumber\":{\"formula\":2,\"computed\":3}") != std::string::npos);
}

TEST_CASE("property: free cones with matching t_k over the grid") {
  for (const auto& [a, d] : apsum::testing::coprime_grid(11, 60, 1, 10)) {
    CAPTURE(a);
    CAPTURE(d);
    const auto seed = ArithmeticSeed::make(a, d);
    const auto table = apery_table(seed);
    const auto cone = cone_decomposition(seed, table);  // throws on a t_k mismatch
    CHECK(cone.free);
    CHECK(cone.t_counts == t_counts_direct(table));
    CHECK(cone.t_counts.front() == 1);
    CHECK(cone.t_counts.at(1) == 4);
    CHECK(std::accumulate(cone.t_counts.begin(), cone.t_counts.end(), std::int64_t{0}) == a);
    Row expected_shifts;
    for (std::size_t k = 0; k < cone.t_counts.size(); ++k) {
      expected_shifts.insert(expected_shifts.end(), static_cast<std::size_t>(cone.t_counts[k]),
                             static_cast<std::int64_t>(k));
    }
    CHECK(cone.shifts == expected_shifts);
    CHECK(cone.reduction.computed == static_cast<std::int64_t>(cone.t_counts.size()) - 1);
    CHECK(hilbert_numerator(seed) == cone.t_counts);
  }
}
