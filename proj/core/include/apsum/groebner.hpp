#pragma once

// A small Buchberger engine for ideals generated by monomials and pure
// binomials x^u - x^v in five variables. Binomial ideals stay binomial under
// S-pairs and reduction, so every polynomial here is "lead - tail" or a single
// monomial and coefficients never need to be stored.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace apsum {

inline constexpr std::size_t kVariables = 5;

/// Exponents of x_1..x_5.
using ExponentVector = std::array<std::int64_t, kVariables>;

enum class MonomialOrder {
  kGrevlex,  // degree reverse lexicographic, x_1 > ... > x_5
  kLex,      // lexicographic, x_1 > ... > x_5
};

std::string_view to_string(MonomialOrder order) noexcept;

/// Strict "x^u > x^v" in the given order.
bool monomial_greater(const ExponentVector& u, const ExponentVector& v, MonomialOrder order);

bool divides(const ExponentVector& u, const ExponentVector& v) noexcept;
ExponentVector monomial_lcm(const ExponentVector& u, const ExponentVector& v) noexcept;
ExponentVector monomial_mul(const ExponentVector& u, const ExponentVector& v);
/// v / u; requires divides(u, v).
ExponentVector monomial_div(const ExponentVector& v, const ExponentVector& u);
std::int64_t total_degree(const ExponentVector& u) noexcept;

/// Human-readable "x1^2*x4", "1" for the unit monomial.
std::string format_monomial(const ExponentVector& u);

/// x^lead, or x^lead - x^tail with lead > tail in the owning order.
class BinomialPoly {
 public:
  static BinomialPoly monomial(const ExponentVector& u) { return BinomialPoly(u, std::nullopt); }

  /// std::nullopt when u == v (the zero polynomial).
  static std::optional<BinomialPoly> binomial(const ExponentVector& u, const ExponentVector& v, MonomialOrder order);

  const ExponentVector& lead() const noexcept { return lead_; }
  const std::optional<ExponentVector>& tail() const noexcept { return tail_; }
  bool is_monomial() const noexcept { return !tail_.has_value(); }

  std::string to_string() const;

  friend bool operator==(const BinomialPoly&, const BinomialPoly&) = default;

 private:
  BinomialPoly(const ExponentVector& lead, std::optional<ExponentVector> tail) : lead_(lead), tail_(tail) {}
  ExponentVector lead_;
  std::optional<ExponentVector> tail_;
};

/// Minimal generators of the monomial ideal generated by `gens` (an antichain
/// under divisibility), sorted lexicographically by exponent vector.
std::vector<ExponentVector> minimal_monomial_generators(std::vector<ExponentVector> gens);

struct GroebnerBasis {
  std::vector<BinomialPoly> elements;  // reduced basis
  MonomialOrder order = MonomialOrder::kGrevlex;

  /// Minimal generators of the leading-term ideal.
  std::vector<ExponentVector> leading_terms() const;
};

/// Full reduction of p (lead and tail) by the given basis.
std::optional<BinomialPoly> reduce(const BinomialPoly& p, std::span<const BinomialPoly> basis, MonomialOrder order);

/// S-polynomial of two elements; std::nullopt when it vanishes identically.
std::optional<BinomialPoly> s_polynomial(const BinomialPoly& f, const BinomialPoly& g, MonomialOrder order);

/// Reduced Groebner basis of the ideal generated by `input`. Every input must
/// already be normalized for `order` (built through BinomialPoly::binomial
/// with the same order).
GroebnerBasis buchberger(std::span<const BinomialPoly> input, MonomialOrder order);

/// True iff every S-pair of the basis reduces to zero.
bool is_groebner_basis(const GroebnerBasis& basis);

/// Monomial ideal over a chosen subset of x_1..x_5.
class MonomialIdealBasis {
 public:
  /// Variables default to x_2..x_5 (x_1 modded out). Throws
  /// std::invalid_argument if a generator uses a variable outside the set.
  static MonomialIdealBasis make(std::vector<ExponentVector> gens,
                                 std::array<bool, kVariables> variables = {false, true, true, true, true});

  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  const std::array<bool, kVariables>& variables() const noexcept { return variables_; }

 private:
  MonomialIdealBasis(std::vector<ExponentVector> gens, std::array<bool, kVariables> vars)
      : gens_(std::move(gens)), variables_(vars) {}
  std::vector<ExponentVector> gens_;
  std::array<bool, kVariables> variables_;
};

/// Number of monomials in the basis variables divisible by no generator;
/// std::nullopt when that set is infinite.
std::optional<std::int64_t> standard_monomial_count(const MonomialIdealBasis& basis);

}  // namespace apsum
