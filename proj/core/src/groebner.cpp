#include "apsum/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

#include "apsum/checked.hpp"

namespace apsum {

std::string_view to_string(MonomialOrder order) noexcept {
  switch (order) {
    case MonomialOrder::kGrevlex: return "grevlex";
    case MonomialOrder::kLex: return "lex";
  }
  return "unknown";
}

std::int64_t total_degree(const ExponentVector& u) noexcept {
  std::int64_t sum = 0;
  for (auto e : u) sum += e;
  return sum;
}

bool monomial_greater(const ExponentVector& u, const ExponentVector& v, MonomialOrder order) {
  if (order == MonomialOrder::kLex) {
    for (std::size_t i = 0; i < kVariables; ++i) {
      if (u[i] != v[i]) return u[i] > v[i];
    }
    return false;
  }
  const auto du = total_degree(u);
  const auto dv = total_degree(v);
  if (du != dv) return du > dv;
  for (std::size_t i = kVariables; i-- > 0;) {
    if (u[i] != v[i]) return u[i] < v[i];
  }
  return false;
}

bool divides(const ExponentVector& u, const ExponentVector& v) noexcept {
  for (std::size_t i = 0; i < kVariables; ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

ExponentVector monomial_lcm(const ExponentVector& u, const ExponentVector& v) noexcept {
  ExponentVector out;
  for (std::size_t i = 0; i < kVariables; ++i) out[i] = std::max(u[i], v[i]);
  return out;
}

ExponentVector monomial_mul(const ExponentVector& u, const ExponentVector& v) {
  ExponentVector out;
  for (std::size_t i = 0; i < kVariables; ++i) out[i] = checked_add(u[i], v[i]);
  return out;
}

ExponentVector monomial_div(const ExponentVector& v, const ExponentVector& u) {
  ExponentVector out;
  for (std::size_t i = 0; i < kVariables; ++i) out[i] = v[i] - u[i];
  return out;
}

std::string format_monomial(const ExponentVector& u) {
  std::string out;
  for (std::size_t i = 0; i < kVariables; ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (u[i] != 1) out += "^" + std::to_string(u[i]);
  }
  return out.empty() ? "1" : out;
}

std::optional<BinomialPoly> BinomialPoly::binomial(const ExponentVector& u, const ExponentVector& v,
                                                   MonomialOrder order) {
  if (u == v) return std::nullopt;
  if (monomial_greater(u, v, order)) return BinomialPoly(u, v);
  return BinomialPoly(v, u);
}

std::string BinomialPoly::to_string() const {
  if (!tail_) return format_monomial(lead_);
  return format_monomial(lead_) + " - " + format_monomial(*tail_);
}

std::vector<ExponentVector> minimal_monomial_generators(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

std::vector<ExponentVector> GroebnerBasis::leading_terms() const {
  std::vector<ExponentVector> lts;
  lts.reserve(elements.size());
  for (const auto& e : elements) lts.push_back(e.lead());
  return minimal_monomial_generators(std::move(lts));
}

namespace {

const BinomialPoly* find_reducer(const ExponentVector& m, std::span<const BinomialPoly> basis) {
  for (const auto& g : basis) {
    if (divides(g.lead(), m)) return &g;
  }
  return nullptr;
}

// Rewrites the monomial m as far as the basis allows. std::nullopt means m
// reduced to zero (hit a monomial generator).
std::optional<ExponentVector> reduce_monomial(ExponentVector m, std::span<const BinomialPoly> basis) {
  while (const BinomialPoly* g = find_reducer(m, basis)) {
    if (g->is_monomial()) return std::nullopt;
    m = monomial_mul(monomial_div(m, g->lead()), *g->tail());
  }
  return m;
}

}  // namespace

std::optional<BinomialPoly> reduce(const BinomialPoly& p, std::span<const BinomialPoly> basis, MonomialOrder order) {
  // Each term is rewritten independently: reducing one term of lead - tail by
  // G - H replaces it with (m*H), keeping the difference-of-monomials shape.
  auto lead = reduce_monomial(p.lead(), basis);
  std::optional<ExponentVector> tail;
  if (p.tail()) tail = reduce_monomial(*p.tail(), basis);
  if (lead && tail) return BinomialPoly::binomial(*lead, *tail, order);
  if (lead) return BinomialPoly::monomial(*lead);
  if (tail) return BinomialPoly::monomial(*tail);
  return std::nullopt;
}

std::optional<BinomialPoly> s_polynomial(const BinomialPoly& f, const BinomialPoly& g, MonomialOrder order) {
  const auto l = monomial_lcm(f.lead(), g.lead());
  const auto mf = monomial_div(l, f.lead());
  const auto mg = monomial_div(l, g.lead());
  std::optional<ExponentVector> tf;
  std::optional<ExponentVector> tg;
  if (f.tail()) tf = monomial_mul(mf, *f.tail());
  if (g.tail()) tg = monomial_mul(mg, *g.tail());
  if (tf && tg) return BinomialPoly::binomial(*tf, *tg, order);
  if (tf) return BinomialPoly::monomial(*tf);
  if (tg) return BinomialPoly::monomial(*tg);
  return std::nullopt;
}

namespace {

bool coprime(const ExponentVector& u, const ExponentVector& v) noexcept {
  for (std::size_t i = 0; i < kVariables; ++i) {
    if (u[i] > 0 && v[i] > 0) return false;
  }
  return true;
}

// Drops elements whose lead is divisible by another lead, then fully reduces
// each survivor by the rest.
std::vector<BinomialPoly> reduce_basis(std::vector<BinomialPoly> g, MonomialOrder order) {
  std::vector<BinomialPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (j == i || !divides(g[j].lead(), g[i].lead())) continue;
      // Equal leads: keep the first occurrence only.
      redundant = g[j].lead() != g[i].lead() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<BinomialPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BinomialPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    // The lead cannot be rewritten by the others; only the tail changes.
    auto p = minimal[i];
    if (p.tail()) {
      auto tail = reduce_monomial(*p.tail(), others);
      p = tail ? *BinomialPoly::binomial(p.lead(), *tail, order) : BinomialPoly::monomial(p.lead());
    }
    reduced.push_back(p);
  }
  std::sort(reduced.begin(), reduced.end(), [order](const BinomialPoly& x, const BinomialPoly& y) {
    return monomial_greater(y.lead(), x.lead(), order);
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::span<const BinomialPoly> input, MonomialOrder order) {
  std::vector<BinomialPoly> basis;
  for (const auto& p : input) {
    if (auto r = reduce(p, basis, order)) basis.push_back(*r);
  }
  // Earlier elements were reduced only against their predecessors; the pair
  // loop below restores completeness regardless.
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(basis[i].lead(), basis[j].lead())) continue;
    auto s = s_polynomial(basis[i], basis[j], order);
    if (!s) continue;
    auto r = reduce(*s, basis, order);
    if (!r) continue;
    basis.push_back(*r);
    const std::size_t k = basis.size() - 1;
    for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
  }
  return GroebnerBasis{reduce_basis(std::move(basis), order), order};
}

bool is_groebner_basis(const GroebnerBasis& basis) {
  const auto& g = basis.elements;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      auto s = s_polynomial(g[i], g[j], basis.order);
      if (s && reduce(*s, g, basis.order)) return false;
    }
  }
  return true;
}

MonomialIdealBasis MonomialIdealBasis::make(std::vector<ExponentVector> gens, std::array<bool, kVariables> variables) {
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < kVariables; ++i) {
      if (g[i] < 0) throw std::invalid_argument("negative exponent in " + format_monomial(g));
      if (g[i] > 0 && !variables[i]) {
        throw std::invalid_argument(format_monomial(g) + " uses x" + std::to_string(i + 1) +
                                    ", which is not a basis variable");
      }
    }
  }
  return MonomialIdealBasis(minimal_monomial_generators(std::move(gens)), variables);
}

namespace {

// Counts monomials in variables vars[k..] avoiding every generator. Generators
// are given with all exponents; only vars[k..] matter.
std::optional<std::int64_t> count_standard(const std::vector<ExponentVector>& gens,
                                           const std::vector<std::size_t>& vars, std::size_t k) {
  for (const auto& g : gens) {
    bool unit = true;
    for (std::size_t t = k; t < vars.size() && unit; ++t) unit = g[vars[t]] == 0;
    if (unit) return 0;
  }
  if (k == vars.size()) return 1;
  if (gens.empty()) return std::nullopt;

  const std::size_t v = vars[k];
  std::vector<std::int64_t> breaks{0};
  for (const auto& g : gens) breaks.push_back(g[v]);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // For exponent e of x_v in [breaks[i], breaks[i+1]) the surviving
  // constraints are the generators with g[v] <= e; the count is constant there.
  std::int64_t total = 0;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    std::vector<ExponentVector> active;
    for (const auto& g : gens) {
      if (g[v] <= breaks[i]) active.push_back(g);
    }
    auto sub = count_standard(active, vars, k + 1);
    const bool last = i + 1 == breaks.size();
    if (!sub) return std::nullopt;
    if (last) {
      if (*sub != 0) return std::nullopt;
    } else {
      total = checked_add(total, checked_mul(breaks[i + 1] - breaks[i], *sub));
    }
  }
  return total;
}

}  // namespace

std::optional<std::int64_t> standard_monomial_count(const MonomialIdealBasis& basis) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < kVariables; ++i) {
    if (basis.variables()[i]) vars.push_back(i);
  }
  return count_standard(basis.generators(), vars, 0);
}

}  // namespace apsum
