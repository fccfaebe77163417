#include "apsum/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "apsum/checked.hpp"
#include "apsum/error.hpp"

namespace apsum {

GeneratorList GeneratorList::make(std::vector<std::int64_t> gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::kInvalidGenerators, "empty generator list");
  }
  std::int64_t g = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] <= 0) {
      throw Error(ErrorCode::kInvalidGenerators, "generator " + std::to_string(gens[i]) + " is not positive");
    }
    if (i > 0 && gens[i] <= gens[i - 1]) {
      throw Error(ErrorCode::kInvalidGenerators, "generators must be strictly increasing");
    }
    g = std::gcd(g, gens[i]);
  }
  if (g != 1) {
    throw Error(ErrorCode::kInvalidGenerators, "gcd of generators is " + std::to_string(g));
  }
  return GeneratorList(std::move(gens));
}

std::vector<std::int64_t> GeneratorList::without(std::size_t i) const {
  std::vector<std::int64_t> out;
  out.reserve(gens_.size() - 1);
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (j != i) out.push_back(gens_[j]);
  }
  return out;
}

SemigroupSieve::SemigroupSieve(std::span<const std::int64_t> gens, std::int64_t bound) {
  if (bound < 0) bound = 0;
  order_.assign(static_cast<std::size_t>(checked_add(bound, 1)), -1);
  order_[0] = 0;
  for (std::int64_t s = 1; s <= bound; ++s) {
    std::int32_t best = -1;
    for (std::int64_t g : gens) {
      if (g > s) continue;
      std::int32_t prev = order_[static_cast<std::size_t>(s - g)];
      if (prev >= 0 && prev + 1 > best) best = prev + 1;
    }
    order_[static_cast<std::size_t>(s)] = best;
  }
}

bool SemigroupSieve::contains(std::int64_t s) const {
  if (s < 0) return false;
  if (s > bound()) {
    throw std::out_of_range("SemigroupSieve: " + std::to_string(s) + " exceeds bound " + std::to_string(bound()));
  }
  return order_[static_cast<std::size_t>(s)] >= 0;
}

std::optional<int> SemigroupSieve::order(std::int64_t s) const {
  if (!contains(s)) return std::nullopt;
  return order_[static_cast<std::size_t>(s)];
}

bool membership(std::int64_t s, const GeneratorList& gens) {
  if (s < 0) return false;
  return SemigroupSieve(gens.values(), s).contains(s);
}

std::vector<std::int64_t> apery_oracle(const GeneratorList& gens, std::int64_t c) {
  if (c <= 0 || !membership(c, gens)) {
    throw Error(ErrorCode::kAperyBaseNotInSemigroup, std::to_string(c) + " is not a nonzero element");
  }
  // Shortest paths on the residue graph mod c: the cheapest way to reach
  // residue i by adding generators is exactly the least element congruent to i.
  const auto n = static_cast<std::size_t>(c);
  std::vector<std::int64_t> best(n, -1);
  using Item = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  best[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != best[residue]) continue;
    for (std::int64_t g : gens.values()) {
      const std::int64_t next = checked_add(value, g);
      const auto r = static_cast<std::size_t>(next % c);
      if (best[r] < 0 || next < best[r]) {
        best[r] = next;
        queue.emplace(next, r);
      }
    }
  }
  return best;
}

std::int64_t frobenius_oracle(const GeneratorList& gens) {
  const auto ap = apery_oracle(gens, gens.multiplicity());
  return *std::max_element(ap.begin(), ap.end()) - gens.multiplicity();
}

int order_oracle(std::int64_t s, const GeneratorList& gens) {
  if (s < 0) throw Error(ErrorCode::kNotMember, std::to_string(s) + " is negative");
  auto o = SemigroupSieve(gens.values(), s).order(s);
  if (!o) throw Error(ErrorCode::kNotMember, std::to_string(s) + " is not in the semigroup");
  return *o;
}

std::vector<std::int64_t> pseudo_frobenius_oracle(const GeneratorList& gens) {
  const std::int64_t a1 = gens.multiplicity();
  const auto ap = apery_oracle(gens, a1);
  const SemigroupSieve sieve(gens.values(), *std::max_element(ap.begin(), ap.end()));
  std::vector<std::int64_t> pf;
  for (std::int64_t w : ap) {
    const bool dominated = std::any_of(ap.begin(), ap.end(), [&](std::int64_t other) {
      return other != w && sieve.contains(other - w);
    });
    if (!dominated) pf.push_back(w - a1);
  }
  std::sort(pf.begin(), pf.end());
  return pf;
}

bool is_minimally_generated(std::span<const std::int64_t> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<std::int64_t> rest;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) rest.push_back(gens[j]);
    }
    if (rest.empty()) continue;
    if (SemigroupSieve(rest, gens[i]).contains(gens[i])) return false;
  }
  return true;
}

}  // namespace apsum
