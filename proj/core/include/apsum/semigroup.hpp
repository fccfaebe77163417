#pragma once

// Brute-force reference engine for arbitrary numerical semigroups. Nothing in
// here knows about the partial-sum family; every closed form elsewhere in the
// library is tested against these routines.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace apsum {

/// Strictly increasing positive generators a_1 < ... < a_e with gcd 1.
class GeneratorList {
 public:
  /// Throws Error(kInvalidGenerators) unless the list is nonempty, strictly
  /// increasing, positive and has gcd 1.
  static GeneratorList make(std::vector<std::int64_t> gens);

  std::span<const std::int64_t> values() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  std::int64_t operator[](std::size_t i) const { return gens_[i]; }

  /// m(Gamma) when the list is minimal.
  std::int64_t multiplicity() const noexcept { return gens_.front(); }

  /// Copy without the i-th generator. The result is not validated for gcd 1.
  std::vector<std::int64_t> without(std::size_t i) const;

  friend bool operator==(const GeneratorList&, const GeneratorList&) = default;

 private:
  explicit GeneratorList(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {}
  std::vector<std::int64_t> gens_;
};

/// Dynamic-programming table of element orders over [0, bound].
///
/// order(s) is the largest total coefficient sum over all factorizations of s,
/// i.e. the largest n with s in nM. Non-members have no order.
class SemigroupSieve {
 public:
  SemigroupSieve(std::span<const std::int64_t> gens, std::int64_t bound);

  std::int64_t bound() const noexcept { return static_cast<std::int64_t>(order_.size()) - 1; }

  /// False for negative s. Throws std::out_of_range above bound().
  bool contains(std::int64_t s) const;

  /// std::nullopt for non-members.
  std::optional<int> order(std::int64_t s) const;

 private:
  std::vector<std::int32_t> order_;  // -1 marks a gap
};

/// True iff s is a nonnegative integer combination of gens (sieve over 0..s).
bool membership(std::int64_t s, const GeneratorList& gens);

/// Entry i is the least element of Gamma congruent to i mod c.
/// Throws Error(kAperyBaseNotInSemigroup) if c is not a positive member.
std::vector<std::int64_t> apery_oracle(const GeneratorList& gens, std::int64_t c);

/// max(Ap(Gamma, a_1)) - a_1; -1 exactly when Gamma is all of N.
std::int64_t frobenius_oracle(const GeneratorList& gens);

/// Throws Error(kNotMember) if s is not in Gamma.
int order_oracle(std::int64_t s, const GeneratorList& gens);

/// {w - a_1 : w maximal in Ap(Gamma, a_1) under w <= w' iff w' - w in Gamma},
/// sorted ascending. Its size is the type t(Gamma).
std::vector<std::int64_t> pseudo_frobenius_oracle(const GeneratorList& gens);

/// True iff no generator lies in the semigroup spanned by the others.
bool is_minimally_generated(std::span<const std::int64_t> gens);

}  // namespace apsum
