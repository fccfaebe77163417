#include <algorithm>
#include <set>

#include "doctest.h"

#include "apsum/error.hpp"
#include "apsum/family.hpp"
#include "apsum/semigroup.hpp"
#include "support/generators.hpp"

using namespace apsum;
using apsum::testing::error_code_of;

namespace {

GeneratorList family(std::int64_t a, std::int64_t d) { return partial_sum_generators(ArithmeticSeed::make(a, d)); }

}  // namespace

TEST_CASE("generator lists are validated") {
  CHECK(GeneratorList::make({2, 3}).size() == 2);
  CHECK(error_code_of([] { GeneratorList::make({}); }) == ErrorCode::kInvalidGenerators);
  CHECK(error_code_of([] { GeneratorList::make({4, 6}); }) == ErrorCode::kInvalidGenerators);
  CHECK(error_code_of([] { GeneratorList::make({3, 3, 5}); }) == ErrorCode::kInvalidGenerators);
  CHECK(error_code_of([] { GeneratorList::make({5, 3}); }) == ErrorCode::kInvalidGenerators);
  CHECK(error_code_of([] { GeneratorList::make({0, 1}); }) == ErrorCode::kInvalidGenerators);
}

TEST_CASE("membership") {
  const auto g = GeneratorList::make({11, 24, 39, 56, 75});
  CHECK(membership(0, g));
  CHECK(membership(75, g));
  CHECK_FALSE(membership(93, g));
  CHECK(membership(94, g));
  CHECK_FALSE(membership(-1, g));
}

TEST_CASE("sieve bounds") {
  const auto g = GeneratorList::make({2, 3});
  const SemigroupSieve sieve(g.values(), 10);
  CHECK(sieve.bound() == 10);
  CHECK_FALSE(sieve.contains(1));
  CHECK(sieve.order(9) == 4);
  CHECK_THROWS_AS(sieve.contains(11), std::out_of_range);
}

TEST_CASE("apery oracle") {
  const auto ap = apery_oracle(family(11, 2), 11);
  CHECK(std::multiset<std::int64_t>(ap.begin(), ap.end()) ==
        std::multiset<std::int64_t>{0, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75});
  CHECK(apery_oracle(GeneratorList::make({1}), 1) == std::vector<std::int64_t>{0});
  CHECK(apery_oracle(family(23, 1), 23)[22] == 321);
  CHECK(error_code_of([] { apery_oracle(GeneratorList::make({3, 5}), 4); }) == ErrorCode::kAperyBaseNotInSemigroup);
  CHECK(error_code_of([] { apery_oracle(GeneratorList::make({3, 5}), 0); }) == ErrorCode::kAperyBaseNotInSemigroup);
  CHECK(apery_oracle(GeneratorList::make({3, 5}), 8).size() == 8);
}

TEST_CASE("frobenius oracle") {
  CHECK(frobenius_oracle(GeneratorList::make({2, 3})) == 1);
  CHECK(frobenius_oracle(GeneratorList::make({1, 5})) == -1);
  CHECK(frobenius_oracle(family(11, 2)) == 93);
  CHECK(frobenius_oracle(family(23, 1)) == 298);
}

TEST_CASE("order oracle") {
  const auto g = family(11, 2);
  CHECK(order_oracle(0, g) == 0);
  CHECK(order_oracle(104, g) == 3);
  CHECK(order_oracle(75, g) == 1);
  CHECK(error_code_of([&] { order_oracle(93, g); }) == ErrorCode::kNotMember);
}

TEST_CASE("pseudo-Frobenius oracle") {
  CHECK(pseudo_frobenius_oracle(GeneratorList::make({2, 3})) == std::vector<std::int64_t>{1});
  CHECK(pseudo_frobenius_oracle(family(11, 2)) == std::vector<std::int64_t>{64, 76, 84, 93});
  // Nine elements, not ten: w(a-7) is not pseudo-Frobenius when a = 3 (mod 10).
  CHECK(pseudo_frobenius_oracle(family(23, 1)) ==
        std::vector<std::int64_t>{143, 169, 221, 245, 247, 271, 272, 274, 298});
}

TEST_CASE("minimal generation") {
  const std::vector<std::int64_t> redundant{3, 5, 8};
  const std::vector<std::int64_t> minimal{3, 5, 7};
  CHECK_FALSE(is_minimally_generated(redundant));
  CHECK(is_minimally_generated(minimal));
}

TEST_CASE("property: Apery oracle covers every residue once, each w - a1 a gap") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = apsum::testing::random_generators(40);
    CAPTURE(std::vector<std::int64_t>(g.values().begin(), g.values().end()));
    const auto a1 = g[0];
    const auto ap = apery_oracle(g, a1);
    REQUIRE(static_cast<std::int64_t>(ap.size()) == a1);
    CHECK(ap[0] == 0);
    for (std::int64_t i = 0; i < a1; ++i) {
      CHECK(ap[static_cast<std::size_t>(i)] % a1 == i);
      CHECK(membership(ap[static_cast<std::size_t>(i)], g));
      CHECK_FALSE(membership(ap[static_cast<std::size_t>(i)] - a1, g));
    }
    CHECK(frobenius_oracle(g) + a1 == *std::max_element(ap.begin(), ap.end()));
  }
}

TEST_CASE("property: order is superadditive") {
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = apsum::testing::random_generators(25);
    const auto f = std::max<std::int64_t>(frobenius_oracle(g), 1);
    const SemigroupSieve sieve(g.values(), 6 * f + 2);
    for (int k = 0; k < 200; ++k) {
      const auto x = apsum::testing::uniform(0, 3 * f);
      const auto y = apsum::testing::uniform(0, 3 * f);
      if (!sieve.contains(x) || !sieve.contains(y)) continue;
      CAPTURE(x);
      CAPTURE(y);
      CHECK(*sieve.order(x + y) >= *sieve.order(x) + *sieve.order(y));
    }
  }
}

TEST_CASE("property: adding a1 raises the order of an Apery element") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = apsum::testing::random_generators(30);
    const auto a1 = g[0];
    const auto ap = apery_oracle(g, a1);
    const auto top = *std::max_element(ap.begin(), ap.end());
    const SemigroupSieve sieve(g.values(), top + 6 * a1);
    for (auto w : ap) {
      for (int k = 0; k <= 4; ++k) {
        CHECK(*sieve.order(w + (k + 1) * a1) >= *sieve.order(w + k * a1) + 1);
      }
    }
  }
}

TEST_CASE("property: pseudo-Frobenius numbers are gaps that every generator closes") {
  // Exhaustive over the partial-sum family with a1 <= 60, plus random lists.
  std::vector<GeneratorList> cases;
  for (const auto& [a, d] : apsum::testing::coprime_grid(2, 60, 1, 6)) cases.push_back(family(a, d));
  for (int trial = 0; trial < 100; ++trial) cases.push_back(apsum::testing::random_generators(60));
  for (const auto& g : cases) {
    const auto pf = pseudo_frobenius_oracle(g);
    CHECK_FALSE(pf.empty());
    for (auto x : pf) {
      CHECK_FALSE(membership(x, g));
      for (auto s : g.values()) CHECK(membership(x + s, g));
    }
  }
}
