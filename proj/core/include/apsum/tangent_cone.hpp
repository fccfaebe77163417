#pragma once

// Apery table of Gamma_5 with respect to a, its ladder analysis, and the
// tangent cone decomposition over the fiber cone F(I), I = (t^a).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apsum/family.hpp"

namespace apsum {

/// rows[s][t] = least element of sM congruent to w_t (mod a), s = 0..R with
/// R the largest Apery order. guard is row R + 1; it closes the last ladder
/// step and is not part of the table proper.
struct AperyTable {
  std::int64_t a = 0;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> guard;
  std::vector<int> orders;  // oracle order of each row-0 entry

  int top_row() const noexcept { return static_cast<int>(rows.size()) - 1; }
  std::vector<std::int64_t> column(std::size_t t) const;  // rows 0..R, then the guard
};

/// Requires m = 5 and a >= 11. Row 0 comes from the closed-form Apery set;
/// orders come from the sieve oracle.
AperyTable apery_table(const ArithmeticSeed& seed);

/// A maximal run a_i = ... = a_{i+k}, k >= 1.
struct Landing {
  int start = 0;
  int end = 0;
  int length() const noexcept { return end - start; }
  bool is_true() const noexcept { return start >= 1; }
};

struct TorsionSummand {
  int shift = 0;   // b_j = e_{j-1}
  int length = 0;  // c_j = s_j - e_{j-1}
};

struct ColumnLadder {
  std::vector<Landing> landings;
  int p = 0;  // number of landings minus one (0 for a column without landings)
  int d = 0;  // end of the last landing
  std::vector<TorsionSummand> torsion;

  /// Exactly one landing, starting at row 0.
  bool free_shaped() const noexcept { return landings.size() == 1 && landings.front().start == 0; }
};

struct LadderAnalysis {
  std::vector<ColumnLadder> columns;  // column 0 included, landing-free
  bool free = true;                   // every column t >= 1 free-shaped
};

/// Landings of one nondecreasing sequence.
std::vector<Landing> ladder_landings(const std::vector<std::int64_t>& ladder);

LadderAnalysis landings(const AperyTable& table);

/// psi(2) = -1, psi(3) = 2, psi(k) = 0 otherwise.
std::int64_t psi(std::int64_t k);

/// t_0..t_{q+2} from the order-count table, trailing zeros removed.
std::vector<std::int64_t> t_counts_closed_form(const ArithmeticSeed& seed);

/// Number of Apery elements of each oracle order, t_0..t_R.
std::vector<std::int64_t> t_counts_direct(const AperyTable& table);

struct ReductionNumber {
  std::int64_t formula = 0;   // floor(a/10) + 1
  std::int64_t computed = 0;  // largest Apery order
  bool agree() const noexcept { return formula == computed; }
};

struct ConeDecomposition {
  std::vector<std::int64_t> t_counts;
  bool free = false;
  std::vector<std::int64_t> shifts;  // 0 for the F summand, then d_t for t >= 1, sorted
  std::vector<TorsionSummand> torsion;
  ReductionNumber reduction;
  /// The analytic spread of I = (t^a) is 1; recorded, not computed.
  static constexpr int kAnalyticSpread = 1;
};

/// Throws Error(kTCountMismatch) if direct and closed-form t_k disagree.
ConeDecomposition cone_decomposition(const ArithmeticSeed& seed);
ConeDecomposition cone_decomposition(const ArithmeticSeed& seed, const AperyTable& table);

/// Throws Error(kUnsupportedNonFreeCone) when the cone is not free.
ReductionNumber reduction_number(const ArithmeticSeed& seed);

/// Numerator of the Hilbert series of the tangent cone over (1 - x).
std::vector<std::int64_t> hilbert_numerator(const ArithmeticSeed& seed);

enum class Tristate { kFalse, kTrue, kNotDetermined };
std::string_view to_string(Tristate value) noexcept;

struct RingProperties {
  bool cohen_macaulay = false;
  bool gorenstein = false;
  Tristate buchsbaum = Tristate::kNotDetermined;
  std::int64_t type = 0;
};

/// Cohen-Macaulay iff free; Gorenstein iff also type 1 (type from the PF oracle).
RingProperties ring_properties(const ArithmeticSeed& seed);

/// One line per row 0..R, comma separated, no header.
std::string table_to_csv(const AperyTable& table);

/// {"rows","tCounts","free","shifts","reductionNumber":{"formula","computed"}}.
std::string cone_to_json(const AperyTable& table, const ConeDecomposition& cone);

}  // namespace apsum
