#pragma once

// The partial-sum family Gamma_m = <s_1, ..., s_m>, s_n = n*a + n(n-1)/2 * d,
// together with its closed-form Apery data in embedding dimension 5 and the
// conjectured formula in dimension 6.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "apsum/semigroup.hpp"

namespace apsum {

/// (a, d, m) with gcd(a, d) = 1, a >= 2, d >= 1, m >= 2.
class ArithmeticSeed {
 public:
  /// Throws Error(kNotCoprime) when gcd(a, d) != 1 and Error(kInvalidSeed)
  /// when a < 2, d < 1 or m < 2.
  static ArithmeticSeed make(std::int64_t a, std::int64_t d, int m = 5);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t d() const noexcept { return d_; }
  int m() const noexcept { return m_; }

  /// a = 10q + r.
  std::int64_t q() const noexcept { return a_ / 10; }
  std::int64_t r() const noexcept { return a_ % 10; }

  ArithmeticSeed with_m(int m) const { return make(a_, d_, m); }

  friend bool operator==(const ArithmeticSeed&, const ArithmeticSeed&) = default;

 private:
  ArithmeticSeed(std::int64_t a, std::int64_t d, int m) : a_(a), d_(d), m_(m) {}
  std::int64_t a_;
  std::int64_t d_;
  int m_;
};

/// Smallest a for which s_1..s_5 is a minimal generating set.
inline constexpr std::int64_t kGamma5MinimalA = 11;

/// s_n for 1 <= n.
std::int64_t partial_sum(const ArithmeticSeed& seed, int n);

/// [s_1, ..., s_m].
GeneratorList partial_sum_generators(const ArithmeticSeed& seed);

struct MinimalityReport {
  std::optional<bool> closed_form;  // only for m = 5: a >= 11
  bool oracle = false;              // no s_i in the semigroup of the others

  bool minimal() const noexcept { return closed_form.value_or(oracle); }
  bool consistent() const noexcept { return !closed_form || *closed_form == oracle; }
};

MinimalityReport minimality_check(const ArithmeticSeed& seed);

/// n = 10 q3 + r3, r3 = 6 q2 + r2, r2 = 3 q1 + r1.
struct RadixDigits5 {
  std::int64_t q3 = 0, r3 = 0, q2 = 0, r2 = 0, q1 = 0, r1 = 0;
  friend bool operator==(const RadixDigits5&, const RadixDigits5&) = default;
};

RadixDigits5 radix5(std::int64_t n);

/// mu(n) = 2 r1 + 3 q1 + 4 q2 + 5 q3, minus one when r1 = 2 and q3 > 0.
std::int64_t mu(std::int64_t n);

struct PhiValues {
  std::int64_t mu = 0;
  std::int64_t phi = 0;    // mu * a + n * d
  std::int64_t omega = 0;  // phi - a
};

/// Throws Error(kResidueOutOfRange) unless 1 <= n <= a - 1.
PhiValues phi_values(std::int64_t n, const ArithmeticSeed& seed);

/// One nonzero Apery class of Gamma_5 with respect to a.
struct AperyRecord {
  std::int64_t n = 0;
  RadixDigits5 digits;
  std::int64_t mu = 0;
  std::int64_t phi = 0;
  std::int64_t omega = 0;
  int order = 0;
  /// Coefficients on (s_2, s_3, s_4, s_5).
  std::array<std::int64_t, 4> expansion{};
};

/// Records for n = 1..a-1 (the zero class is implicit). Requires m = 5 and
/// a >= 11; throws Error(kUnsupportedEmbeddingDimension) or
/// Error(kBelowMinimalityThreshold) otherwise.
std::vector<AperyRecord> apery_gamma5(const ArithmeticSeed& seed);

/// Column-ordered Apery set [0, phi(1), ..., phi(a-1)].
std::vector<std::int64_t> apery_set_gamma5(const ArithmeticSeed& seed);

struct ExpansionCount {
  std::int64_t element = 0;
  std::int64_t count = 0;
};

struct UniquenessViolation {
  std::int64_t element = 0;
  std::int64_t count = 0;
  /// Up to kMaxRecordedExpansions coefficient vectors on the non-base generators.
  std::vector<std::vector<std::int64_t>> expansions;
};

struct UniquenessReport {
  bool all_unique = true;
  std::vector<std::int64_t> basis;   // generators other than the base element
  std::vector<ExpansionCount> counts;  // one per Apery element, residue order
  std::vector<UniquenessViolation> violations;
};

inline constexpr std::size_t kMaxRecordedExpansions = 8;

/// Exhaustively counts the representations of each element of Ap(Gamma, c)
/// over the generators other than c. Throws Error(kAperyBaseNotInSemigroup).
UniquenessReport uniqueness_check(const GeneratorList& gens, std::int64_t c);

/// n = 15 s4 + t4, t4 = 10 s3 + t3, t3 = 6 s2 + t2, t2 = 3 s1 + t1.
struct RadixDigits6 {
  std::int64_t s4 = 0, t4 = 0, s3 = 0, t3 = 0, s2 = 0, t2 = 0, s1 = 0, t1 = 0;
  bool in_s = false;    // n in {12} u {20+15k, 23+15k, 27+15k}
  bool in_s20 = false;  // n in {20+15k}
  friend bool operator==(const RadixDigits6&, const RadixDigits6&) = default;
};

RadixDigits6 radix6(std::int64_t n);

/// Integer vectors (c1, c2, c3, c4), not all zero, with c1 >= -2, c2 >= -1,
/// c4 >= 0, c1 + 3 c2 + 6 c3 = 10 c4 and 4 c1 + 3 c2 + 5 c4 <= 0, found by
/// enumerating c1 <= c1_max, c2 <= c2_max, c4 <= c4_max and solving for c3.
/// The only expected solution is (-2, 0, 2, 1).
std::vector<std::array<std::int64_t, 4>> nonpositive_relations(std::int64_t c1_max, std::int64_t c2_max,
                                                               std::int64_t c4_max);

/// Conjectured multiplier for the Gamma_6 Apery element of class n.
std::int64_t nu(std::int64_t n);

/// Column-ordered [0, nu(1) a + d, ..., nu(a-1) a + (a-1) d]. Requires m = 6.
std::vector<std::int64_t> apery_gamma6_conjectured(const ArithmeticSeed& seed);

}  // namespace apsum
