#pragma once

// Binomial generator catalogs for the defining ideal p_5 of Gamma_5 and their
// verification by the Gastinger dimension criterion: a sub-ideal J of p_5 is
// all of p_5 iff dim_k A / (J + (x_1)) = s_1 = a.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apsum/family.hpp"
#include "apsum/groebner.hpp"

namespace apsum {

struct BinomialGenerator {
  std::string label;  // "g1", "h23", "p41", "extra", ...
  ExponentVector lhs{};
  ExponentVector rhs{};

  friend bool operator==(const BinomialGenerator&, const BinomialGenerator&) = default;
};

std::string format_binomial(const BinomialGenerator& b);

/// Which printed family a seed's catalog comes from.
enum class CatalogFamily {
  kGH,        // G u H_r, a >= 19 and (a,d) not in {(21,1),(21,2)}
  kSmallT,    // frak-T_(a,d), 11 <= a <= 18
  kT21,       // frak-T_(21,d), d in {1,2}
};

std::string_view to_string(CatalogFamily family) noexcept;

/// frak-T_(21,d) is printed without any g_i. kAugmented adds all of G.
enum class CatalogVariant { kStrict, kAugmented };

std::string_view to_string(CatalogVariant variant) noexcept;

/// kAsPrinted reproduces the printed exponents verbatim, including the
/// binomials that are not weighted-homogeneous; it is the default because it
/// is the claim under test. kCorrected replaces those with the homogeneous
/// binomial the surrounding pattern calls for.
enum class CatalogEdition { kCorrected, kAsPrinted };

std::string_view to_string(CatalogEdition edition) noexcept;

struct CatalogOptions {
  CatalogVariant variant = CatalogVariant::kStrict;
  CatalogEdition edition = CatalogEdition::kAsPrinted;
};

/// One correction applied by the kCorrected edition.
struct CatalogCorrection {
  std::string label;
  BinomialGenerator printed;
  BinomialGenerator corrected;
};

CatalogFamily catalog_family(const ArithmeticSeed& seed);

/// The seed-independent set G = {g_1, ..., g_7}.
std::vector<BinomialGenerator> catalog_g();

/// Minimal generating set of p_5 for the seed. Requires m = 5 and a >= 11;
/// throws Error(kCatalogInvalidForSeed) naming the generator if an exponent
/// would be negative.
std::vector<BinomialGenerator> generator_catalog(const ArithmeticSeed& seed, CatalogOptions options = {});

/// Corrections that generator_catalog(seed, {variant, kCorrected}) applies.
std::vector<CatalogCorrection> catalog_corrections(const ArithmeticSeed& seed,
                                                   CatalogVariant variant = CatalogVariant::kStrict);

/// Sum of e_i * s_i.
std::int64_t weighted_degree(const ExponentVector& e, const GeneratorList& gens);

/// True iff every binomial has equal weighted degree on both sides.
bool homogeneity_check(std::span<const BinomialGenerator> bins, const ArithmeticSeed& seed);

/// Labels of the binomials that fail homogeneity.
std::vector<std::string> inhomogeneous_labels(std::span<const BinomialGenerator> bins, const ArithmeticSeed& seed);

/// Catalog binomials rewritten as polynomials for the Groebner engine.
std::vector<BinomialPoly> to_polys(std::span<const BinomialGenerator> bins, MonomialOrder order);

/// dim_k A / (J + (x_1)) via Groebner basis -> leading-term ideal ->
/// standard monomials in x_2..x_5. std::nullopt when infinite.
std::optional<std::int64_t> quotient_dimension_mod_x1(std::span<const BinomialGenerator> bins,
                                                      MonomialOrder order = MonomialOrder::kGrevlex);

/// Leading-term ideal of J + (x_1) restricted to x_2..x_5.
MonomialIdealBasis leading_term_ideal_mod_x1(std::span<const BinomialGenerator> bins,
                                             MonomialOrder order = MonomialOrder::kGrevlex);

struct DropOneResult {
  std::string label;
  std::optional<std::int64_t> dimension;  // std::nullopt = infinite
};

struct GastingerReport {
  std::int64_t target = 0;                // a
  std::optional<std::int64_t> dimension;  // std::nullopt = infinite
  bool homogeneous = false;
  bool pass = false;     // homogeneous and dimension == a
  bool minimal = false;  // pass and every drop-one dimension != a
  std::vector<DropOneResult> drop_one;
  std::vector<ExponentVector> leading_terms;  // x_2..x_5 part
};

GastingerReport gastinger_verify(std::span<const BinomialGenerator> bins, const ArithmeticSeed& seed,
                                 MonomialOrder order = MonomialOrder::kGrevlex);

GastingerReport gastinger_verify(const ArithmeticSeed& seed, CatalogOptions options = {},
                                 MonomialOrder order = MonomialOrder::kGrevlex);

/// For (21,1) and (21,2): runs both variants and records which one passes.
struct CatalogAdjudication {
  GastingerReport strict;
  GastingerReport augmented;
  std::optional<CatalogVariant> passing;  // set iff exactly one variant passes
};

CatalogAdjudication adjudicate_t21(const ArithmeticSeed& seed, CatalogEdition edition = CatalogEdition::kAsPrinted);

/// JSON array of {"label", "lhs": [5 ints], "rhs": [5 ints]}.
std::string catalog_to_json(std::span<const BinomialGenerator> bins);

/// Inverse of catalog_to_json. Throws std::invalid_argument on malformed input.
std::vector<BinomialGenerator> catalog_from_json(std::string_view text);

}  // namespace apsum
