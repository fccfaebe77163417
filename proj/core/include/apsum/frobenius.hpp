#pragma once

// Closed-form pseudo-Frobenius sets, Frobenius numbers and type of Gamma_5.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "apsum/family.hpp"

namespace apsum {

enum class PFSource { kLargeA, kSmallA, kOracle };

std::string_view to_string(PFSource source) noexcept;

struct PFResult {
  std::vector<std::int64_t> pf;        // ascending
  std::vector<std::int64_t> residues;  // the n with w(n) in pf, ascending (empty for oracle)
  std::int64_t frobenius = 0;
  int type_count = 0;
  PFSource source = PFSource::kOracle;
};

/// Offsets i for T_r = {w(a - i)} when a >= 20 and r = a mod 10, as printed.
std::span<const int> pf_offsets_large_a(int r);

/// Residues n for the 11 <= a <= 19 case list.
std::span<const int> pf_residues_small_a(std::int64_t a);

/// a >= 20: {w(a-i) : i in T_r} u {w(5), w(8)}; 11 <= a <= 19: the case list.
/// Throws Error(kBelowMinimalityThreshold) for a < 11.
PFResult pf_gamma5(const ArithmeticSeed& seed);

/// Oracle result packaged the same way.
PFResult pf_oracle(const ArithmeticSeed& seed);

/// a >= 20: w(a-1). 11 <= a <= 19: the case list keyed by strict (a, d)
/// inequalities; a boundary hit throws Error(kCaseBoundary).
/// For a >= 20 with a = 1 or 7 (mod 10) the true Frobenius number is w(a-2);
/// pf_gamma5(seed).frobenius (the PF maximum) has it right.
std::int64_t frobenius_gamma5(const ArithmeticSeed& seed);

/// The residue n whose w(n) the small-a case list names as F(Gamma_5).
std::int64_t frobenius_residue_small_a(const ArithmeticSeed& seed);

}  // namespace apsum
