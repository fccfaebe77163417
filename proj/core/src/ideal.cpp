#include "apsum/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "apsum/checked.hpp"
#include "apsum/error.hpp"

namespace apsum {

namespace {

using E = ExponentVector;

E x(std::int64_t e1, std::int64_t e2, std::int64_t e3, std::int64_t e4, std::int64_t e5) { return {e1, e2, e3, e4, e5}; }

std::string seed_label(const ArithmeticSeed& seed) {
  return "(a,d)=(" + std::to_string(seed.a()) + "," + std::to_string(seed.d()) + ")";
}

BinomialGenerator make_bin(const ArithmeticSeed& seed, std::string label, const E& lhs, const E& rhs) {
  for (std::size_t i = 0; i < kVariables; ++i) {
    if (lhs[i] < 0 || rhs[i] < 0) {
      throw Error(ErrorCode::kCatalogInvalidForSeed,
                  label + " has exponent of x" + std::to_string(i + 1) + " < 0 at " + seed_label(seed));
    }
  }
  return BinomialGenerator{std::move(label), lhs, rhs};
}

std::vector<BinomialGenerator> pick_g(std::initializer_list<int> which) {
  const auto all = catalog_g();
  std::vector<BinomialGenerator> out;
  for (int i : which) out.push_back(all[static_cast<std::size_t>(i - 1)]);
  return out;
}

// H_r with E = 5q + d, as printed.
std::vector<BinomialGenerator> catalog_h_printed(const ArithmeticSeed& seed, int r, std::string_view skip = {}) {
  const std::int64_t q = seed.q();
  const std::int64_t e = checked_add(checked_mul(5, q), seed.d());
  // A skipped label yields an empty placeholder that the caller never sees.
  auto b = [&](std::string label, const E& lhs, const E& rhs) {
    if (label == skip) return BinomialGenerator{};
    return make_bin(seed, std::move(label), lhs, rhs);
  };
  auto drop_skipped = [&](std::vector<BinomialGenerator> v) {
    std::erase_if(v, [](const BinomialGenerator& g) { return g.label.empty(); });
    return v;
  };
  switch (r) {
    case 0:
      return drop_skipped({b("h01", x(e, 0, 0, 0, 0), x(0, 0, 0, 0, q)),
              b("h02", x(e - 1, 2, 0, 0, 0), x(0, 0, 0, 2, q - 1))});
    case 1:
      return drop_skipped({b("h11", x(e - 13, 9, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h12", x(e - 6, 5, 0, 0, 0), x(0, 0, 0, 1, q)),
              b("h13", x(e - 1, 2, 0, 0, 0), x(0, 0, 1, 0, q)),
              b("h14", x(e + 2, 0, 0, 0, 0), x(0, 1, 0, 0, q)),
              b("h15", x(e + 1, 1, 0, 0, 0), x(0, 0, 0, 2, q - 1))});
    case 2:
      return drop_skipped({b("h21", x(e - 11, 8, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h22", x(e - 4, 4, 0, 0, 0), x(0, 0, 0, 1, q)),
              b("h23", x(e + 1, 1, 0, 0, 0), x(0, 0, 1, 0, q)),
              b("h24", x(e + 3, 0, 0, 0, 0), x(0, 0, 0, 2, q - 1))});
    case 3:
      return drop_skipped({b("h31", x(e - 9, 7, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h32", x(e - 2, 3, 0, 0, 0), x(0, 0, 0, 1, q)),
              b("h33", x(e + 3, 0, 0, 0, 0), x(0, 0, 1, 0, q)),
              b("h34", x(e - 3, 5, 0, 0, 0), x(0, 0, 0, 3, q - 1)),
              b("h35", x(e + 2, 2, 0, 0, 0), x(0, 0, 1, 2, q - 1))});
    case 4:
      return drop_skipped({b("h41", x(e - 7, 6, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h42", x(e, 2, 0, 0, 0), x(0, 0, 0, 1, q)),
              b("h43", x(e + 5, 0, 0, 0, 0), x(0, 1, 1, 0, q)),
              b("h44", x(e - 1, 4, 0, 0, 0), x(0, 0, 0, 3, q - 1)),
              b("h45", x(e + 4, 1, 0, 0, 0), x(0, 0, 1, 2, q - 1))});
    case 5:
      return drop_skipped({b("h51", x(e - 5, 5, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h52", x(e + 2, 1, 0, 0, 0), x(0, 0, 0, 1, q)),
              b("h53", x(e + 1, 3, 0, 0, 0), x(0, 0, 0, 3, q - 1)),
              b("h54", x(e + 6, 0, 0, 0, 0), x(0, 0, 1, 2, q - 1))});
    case 6:
      return drop_skipped({b("h61", x(e - 3, 4, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h62", x(e + 4, 0, 0, 0, 0), x(0, 0, 0, 1, q)),
              b("h63", x(e + 3, 2, 0, 0, 0), x(0, 0, 0, 3, q - 1))});
    case 7:
      return drop_skipped({b("h71", x(e - 1, 3, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h72", x(e - 2, 5, 0, 0, 0), x(0, 0, 0, 2, q)),
              b("h73", x(e + 3, 2, 0, 0, 0), x(0, 0, 1, 1, q)),
              b("h74", x(e + 6, 0, 0, 0, 0), x(0, 1, 0, 1, q)),
              b("h75", x(e + 5, 1, 0, 0, 0), x(0, 0, 0, 2, q - 1))});
    case 8:
      return drop_skipped({b("h81", x(e + 1, 2, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h82", x(e + 5, 1, 0, 0, 0), x(0, 0, 1, 1, q)),
              b("h83", x(e, 4, 0, 0, 0), x(0, 0, 0, 2, q)),
              b("h84", x(e + 7, 0, 0, 0, 0), x(0, 0, 0, 3, q - 1))});
    case 9:
      return drop_skipped({b("h91", x(e + 3, 1, 0, 0, 0), x(0, 0, 0, 0, q + 1)),
              b("h92", x(e + 7, 0, 0, 0, 0), x(0, 0, 1, 1, q)),
              b("h93", x(e + 2, 3, 0, 0, 0), x(0, 0, 0, 2, q))});
  }
  throw Error(ErrorCode::kResidueOutOfRange, "r outside 0..9");
}

// T_(a,d) (the p_ij), as printed.
std::vector<BinomialGenerator> catalog_p(const ArithmeticSeed& seed) {
  const std::int64_t d = seed.d();
  auto b = [&](std::string label, const E& lhs, const E& rhs) { return make_bin(seed, std::move(label), lhs, rhs); };
  switch (seed.a()) {
    case 11:
      return {b("p11", x(d - 1, 5, 0, 0, 0), x(0, 0, 0, 1, 1)),
              b("p12", x(d + 4, 2, 0, 0, 0), x(0, 0, 1, 0, 1)),
              b("p13", x(d + 7, 0, 0, 0, 0), x(0, 1, 0, 0, 1)),
              b("p14", x(d + 6, 1, 0, 0, 0), x(0, 0, 0, 2, 0))};
    case 12:
      return {b("p21", x(d + 1, 4, 0, 0, 0), x(0, 0, 0, 1, 1)),
              b("p22", x(d + 6, 1, 0, 0, 0), x(0, 0, 1, 0, 1)),
              b("p23", x(d + 8, 0, 0, 0, 0), x(0, 0, 0, 2, 0))};
    case 13:
      return {b("p31", x(d + 3, 3, 0, 0, 0), x(0, 0, 0, 1, 1)),
              b("p32", x(d + 8, 0, 0, 0, 0), x(0, 0, 1, 0, 1)),
              b("p33", x(d + 2, 5, 0, 0, 0), x(0, 0, 0, 3, 0)),
              b("p34", x(d + 7, 2, 0, 0, 0), x(0, 0, 1, 2, 0))};
    case 14:
      return {b("p41", x(d + 5, 2, 0, 0, 0), x(0, 0, 0, 1, 1)),
              b("p42", x(d + 10, 0, 0, 0, 0), x(0, 1, 1, 0, 1)),
              b("p43", x(d + 4, 4, 0, 0, 0), x(0, 0, 0, 3, 0)),
              b("p44", x(d + 9, 1, 0, 0, 0), x(0, 0, 1, 2, 0))};
    case 15:
      return {b("p51", x(d, 5, 0, 0, 0), x(0, 0, 0, 0, 2)),
              b("p52", x(d + 7, 1, 0, 0, 0), x(0, 0, 0, 1, 1)),
              b("p53", x(d + 6, 3, 0, 0, 0), x(0, 0, 0, 3, 0)),
              b("p54", x(d + 11, 0, 0, 0, 0), x(0, 0, 1, 2, 0))};
    case 16:
      return {b("p61", x(d + 2, 4, 0, 0, 0), x(0, 0, 0, 0, 2)),
              b("p62", x(d + 9, 0, 0, 0, 0), x(0, 0, 0, 1, 1)),
              b("p63", x(d + 8, 2, 0, 0, 0), x(0, 0, 0, 3, 0))};
    case 17:
      return {b("p71", x(d + 4, 3, 0, 0, 0), x(0, 0, 0, 0, 2)),
              b("p72", x(d + 3, 5, 0, 0, 0), x(0, 0, 0, 2, 1)),
              b("p73", x(d + 8, 2, 0, 0, 0), x(0, 0, 1, 1, 1)),
              b("p74", x(d + 11, 0, 0, 0, 0), x(0, 1, 0, 1, 1)),
              b("p75", x(d + 10, 1, 0, 0, 0), x(0, 0, 0, 3, 0))};
    case 18:
      return {b("p81", x(d + 6, 2, 0, 0, 0), x(0, 0, 0, 0, 2)),
              b("p82", x(d + 10, 1, 0, 0, 0), x(0, 0, 1, 1, 1)),
              b("p83", x(d + 5, 4, 0, 0, 0), x(0, 0, 0, 2, 1)),
              b("p84", x(d + 12, 0, 0, 0, 0), x(0, 0, 0, 3, 0))};
  }
  throw Error(ErrorCode::kNoCatalogForSeed, "no T_(a,d) for " + seed_label(seed));
}

// The extra binomial that joins T_(a,d) for 11 <= a <= 14, as printed.
std::optional<BinomialGenerator> small_extra_printed(const ArithmeticSeed& seed) {
  const std::int64_t d = seed.d();
  auto b = [&](const E& lhs, const E& rhs) { return make_bin(seed, "extra", lhs, rhs); };
  const E x5sq = x(0, 0, 0, 0, 2);
  switch (seed.a()) {
    case 11:
      if (d == 1) return b(x(0, 5, 0, 0, 0), x(0, 0, 0, 1, 1));
      if (d == 2) return b(x(0, 3, 2, 0, 0), x5sq);
      if (d == 3) return b(x(1, 3, 2, 0, 0), x5sq);
      if (d == 4) return b(x(2, 3, 2, 0, 0), x5sq);
      if (d == 5) return b(x(0, 6, 1, 0, 0), x5sq);
      if (d == 6 || d == 7) return b(x(1, 6, 1, 0, 0), x5sq);
      return b(x(d - 8, 9, 0, 0, 0), x5sq);
    case 12:
      if (d == 1) return b(x(1, 2, 2, 0, 0), x5sq);
      if (d == 5) return b(x(2, 5, 1, 0, 0), x5sq);
      return b(x(d - 6, 8, 0, 0, 0), x5sq);
    case 13:
      if (d == 1) return b(x(0, 2, 1, 0, 0), x5sq);
      if (d == 2) return b(x(1, 4, 1, 0, 0), x5sq);
      if (d == 3) return b(x(2, 4, 1, 0, 0), x5sq);
      return b(x(d - 4, 7, 0, 0, 0), x5sq);
    case 14:
      if (d == 1) return b(x(0, 4, 1, 0, 0), x5sq);
      return b(x(d - 2, 6, 0, 0, 0), x5sq);
  }
  return std::nullopt;
}

struct CorrectionRule {
  const char* label;
  bool (*applies)(const ArithmeticSeed&);
  BinomialGenerator (*build)(const ArithmeticSeed&);
};

const CorrectionRule kCorrections[] = {
    // At (11,1) the printed extra repeats p11; the missing relation sits in degree 2 s_5.
    {"extra", [](const ArithmeticSeed& s) { return s.a() == 11 && s.d() == 1; },
     [](const ArithmeticSeed& s) { return make_bin(s, "extra", x(1, 3, 0, 1, 0), x(0, 0, 0, 0, 2)); }},
    // h75: x_4^2 x_5^(q-1) has the wrong weight for every a = 10q+7; x_4^3
    // matches h53, h63, h84.
    {"h75", [](const ArithmeticSeed& s) { return s.a() >= 19 && s.r() == 7; },
     [](const ArithmeticSeed& s) {
       const std::int64_t e = 5 * s.q() + s.d();
       return make_bin(s, "h75", x(e + 5, 1, 0, 0, 0), x(0, 0, 0, 3, s.q() - 1));
     }},
    // (11,6) and (11,7) share one printed binomial that only fits d = 6.
    {"extra", [](const ArithmeticSeed& s) { return s.a() == 11 && s.d() == 7; },
     [](const ArithmeticSeed& s) { return make_bin(s, "extra", x(2, 6, 1, 0, 0), x(0, 0, 0, 0, 2)); }},
    {"extra", [](const ArithmeticSeed& s) { return s.a() == 13 && s.d() == 1; },
     [](const ArithmeticSeed& s) { return make_bin(s, "extra", x(0, 4, 1, 0, 0), x(0, 0, 0, 0, 2)); }},
    {"extra", [](const ArithmeticSeed& s) { return s.a() == 14 && s.d() == 1; },
     [](const ArithmeticSeed& s) { return make_bin(s, "extra", x(2, 3, 1, 0, 0), x(0, 0, 0, 0, 2)); }},
    // (21,1) and (21,2) share x_1 x_2^6 x_3 - x_5^3, which only fits d = 1.
    {"extra", [](const ArithmeticSeed& s) { return s.a() == 21 && s.d() == 2; },
     [](const ArithmeticSeed& s) { return make_bin(s, "extra", x(2, 6, 1, 0, 0), x(0, 0, 0, 0, 3)); }},
};

std::vector<BinomialGenerator> printed_catalog(const ArithmeticSeed& seed, CatalogVariant variant) {
  std::vector<BinomialGenerator> out;
  switch (catalog_family(seed)) {
    case CatalogFamily::kGH:
      out = catalog_g();
      for (auto& h : catalog_h_printed(seed, static_cast<int>(seed.r()))) out.push_back(std::move(h));
      break;
    case CatalogFamily::kSmallT: {
      out = catalog_p(seed);
      std::vector<BinomialGenerator> gs;
      switch (seed.a()) {
        case 11: gs = pick_g({3, 5, 6}); break;
        case 12: gs = pick_g({3, 5, 6, 7}); break;
        default: gs = pick_g({3, 4, 5, 6, 7}); break;
      }
      for (auto& g : gs) out.push_back(std::move(g));
      if (auto extra = small_extra_printed(seed)) out.push_back(std::move(*extra));
      break;
    }
    case CatalogFamily::kT21: {
      if (variant == CatalogVariant::kAugmented) out = catalog_g();
      // h11 would need x_1^(d-3) here, so it is never built.
      for (auto& h : catalog_h_printed(seed, 1, "h11")) out.push_back(std::move(h));
      out.push_back(make_bin(seed, "extra", x(1, 6, 1, 0, 0), x(0, 0, 0, 0, 3)));
      break;
    }
  }
  return out;
}

// Set semantics: the printed (11,1) lists x_2^5 - x_4 x_5 twice.
std::vector<BinomialGenerator> dedupe(std::vector<BinomialGenerator> in) {
  std::vector<BinomialGenerator> unique;
  for (auto& b : in) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const BinomialGenerator& u) {
      return (u.lhs == b.lhs && u.rhs == b.rhs) || (u.lhs == b.rhs && u.rhs == b.lhs);
    });
    if (!seen) unique.push_back(std::move(b));
  }
  return unique;
}

}  // namespace

std::string format_binomial(const BinomialGenerator& b) {
  return format_monomial(b.lhs) + " - " + format_monomial(b.rhs);
}

std::string_view to_string(CatalogFamily family) noexcept {
  switch (family) {
    case CatalogFamily::kGH: return "G+H_r";
    case CatalogFamily::kSmallT: return "T(a,d)";
    case CatalogFamily::kT21: return "T(21,d)";
  }
  return "unknown";
}

std::string_view to_string(CatalogVariant variant) noexcept {
  return variant == CatalogVariant::kStrict ? "strict" : "augmented";
}

std::string_view to_string(CatalogEdition edition) noexcept {
  return edition == CatalogEdition::kCorrected ? "corrected" : "printed";
}

CatalogFamily catalog_family(const ArithmeticSeed& seed) {
  if (seed.m() != 5) {
    throw Error(ErrorCode::kUnsupportedEmbeddingDimension, "catalogs exist only for m=5");
  }
  if (seed.a() < kGamma5MinimalA) {
    throw Error(ErrorCode::kBelowMinimalityThreshold, "catalogs need a >= 11, got " + seed_label(seed));
  }
  if (seed.a() == 21 && (seed.d() == 1 || seed.d() == 2)) return CatalogFamily::kT21;
  if (seed.a() <= 18) return CatalogFamily::kSmallT;
  return CatalogFamily::kGH;
}

std::vector<BinomialGenerator> catalog_g() {
  return {
      {"g1", x(0, 0, 0, 4, 0), x(1, 1, 1, 0, 2)},
      {"g2", x(0, 0, 1, 3, 0), x(3, 1, 0, 0, 2)},
      {"g3", x(0, 0, 2, 0, 0), x(2, 0, 0, 1, 0)},
      {"g4", x(0, 1, 0, 2, 0), x(2, 0, 1, 0, 1)},
      {"g5", x(0, 1, 1, 1, 0), x(4, 0, 0, 0, 1)},
      {"g6", x(0, 3, 0, 0, 0), x(3, 0, 1, 0, 0)},
      {"g7", x(1, 0, 0, 2, 0), x(0, 2, 0, 0, 1)},
  };
}

std::vector<CatalogCorrection> catalog_corrections(const ArithmeticSeed& seed, CatalogVariant variant) {
  std::vector<CatalogCorrection> out;
  const auto printed = printed_catalog(seed, variant);
  for (const auto& rule : kCorrections) {
    if (!rule.applies(seed)) continue;
    for (const auto& b : printed) {
      if (b.label == rule.label) out.push_back({b.label, b, rule.build(seed)});
    }
  }
  return out;
}

std::vector<BinomialGenerator> generator_catalog(const ArithmeticSeed& seed, CatalogOptions options) {
  auto catalog = printed_catalog(seed, options.variant);
  if (options.edition == CatalogEdition::kCorrected) {
    for (const auto& fix : catalog_corrections(seed, options.variant)) {
      for (auto& b : catalog) {
        if (b == fix.printed) b = fix.corrected;
      }
    }
  }
  return dedupe(std::move(catalog));
}

std::int64_t weighted_degree(const ExponentVector& e, const GeneratorList& gens) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < kVariables && i < gens.size(); ++i) {
    sum = checked_add(sum, checked_mul(e[i], gens[i]));
  }
  return sum;
}

std::vector<std::string> inhomogeneous_labels(std::span<const BinomialGenerator> bins, const ArithmeticSeed& seed) {
  const auto gens = partial_sum_generators(seed.with_m(5));
  std::vector<std::string> out;
  for (const auto& b : bins) {
    if (weighted_degree(b.lhs, gens) != weighted_degree(b.rhs, gens)) out.push_back(b.label);
  }
  return out;
}

bool homogeneity_check(std::span<const BinomialGenerator> bins, const ArithmeticSeed& seed) {
  return inhomogeneous_labels(bins, seed).empty();
}

std::vector<BinomialPoly> to_polys(std::span<const BinomialGenerator> bins, MonomialOrder order) {
  std::vector<BinomialPoly> out;
  for (const auto& b : bins) {
    if (auto p = BinomialPoly::binomial(b.lhs, b.rhs, order)) out.push_back(*p);
  }
  return out;
}

MonomialIdealBasis leading_term_ideal_mod_x1(std::span<const BinomialGenerator> bins, MonomialOrder order) {
  // Setting x_1 = 0: a term containing x_1 vanishes, so a binomial with x_1 in
  // exactly one term becomes the other monomial and one with x_1 in both
  // terms disappears. Binomials free of x_1 stay binomial.
  std::vector<BinomialPoly> polys;
  for (const auto& b : bins) {
    const bool l1 = b.lhs[0] > 0;
    const bool r1 = b.rhs[0] > 0;
    if (l1 && r1) continue;
    if (l1) {
      polys.push_back(BinomialPoly::monomial(b.rhs));
    } else if (r1) {
      polys.push_back(BinomialPoly::monomial(b.lhs));
    } else if (auto p = BinomialPoly::binomial(b.lhs, b.rhs, order)) {
      polys.push_back(*p);
    }
  }
  const auto gb = buchberger(polys, order);
  return MonomialIdealBasis::make(gb.leading_terms());
}

std::optional<std::int64_t> quotient_dimension_mod_x1(std::span<const BinomialGenerator> bins, MonomialOrder order) {
  return standard_monomial_count(leading_term_ideal_mod_x1(bins, order));
}

GastingerReport gastinger_verify(std::span<const BinomialGenerator> bins, const ArithmeticSeed& seed,
                                 MonomialOrder order) {
  GastingerReport report;
  report.target = seed.a();
  report.homogeneous = homogeneity_check(bins, seed);
  const auto lt = leading_term_ideal_mod_x1(bins, order);
  report.leading_terms = lt.generators();
  report.dimension = standard_monomial_count(lt);
  report.pass = report.homogeneous && report.dimension == seed.a();
  bool all_drops_fail = true;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    std::vector<BinomialGenerator> rest;
    for (std::size_t j = 0; j < bins.size(); ++j) {
      if (j != i) rest.push_back(bins[j]);
    }
    DropOneResult drop{bins[i].label, quotient_dimension_mod_x1(rest, order)};
    if (drop.dimension == seed.a()) all_drops_fail = false;
    report.drop_one.push_back(std::move(drop));
  }
  report.minimal = report.pass && all_drops_fail;
  return report;
}

GastingerReport gastinger_verify(const ArithmeticSeed& seed, CatalogOptions options, MonomialOrder order) {
  const auto catalog = generator_catalog(seed, options);
  return gastinger_verify(catalog, seed, order);
}

CatalogAdjudication adjudicate_t21(const ArithmeticSeed& seed, CatalogEdition edition) {
  if (catalog_family(seed) != CatalogFamily::kT21) {
    throw Error(ErrorCode::kNoCatalogForSeed, "adjudication applies only to (21,1) and (21,2), got " + seed_label(seed));
  }
  CatalogAdjudication out;
  out.strict = gastinger_verify(seed, {CatalogVariant::kStrict, edition});
  out.augmented = gastinger_verify(seed, {CatalogVariant::kAugmented, edition});
  if (out.strict.pass != out.augmented.pass) {
    out.passing = out.strict.pass ? CatalogVariant::kStrict : CatalogVariant::kAugmented;
  }
  return out;
}

std::string catalog_to_json(std::span<const BinomialGenerator> bins) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : bins) {
    arr.push_back({{"label", b.label}, {"lhs", b.lhs}, {"rhs", b.rhs}});
  }
  return arr.dump();
}

std::vector<BinomialGenerator> catalog_from_json(std::string_view text) {
  std::vector<BinomialGenerator> out;
  try {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("catalog JSON must be an array");
    for (const auto& item : arr) {
      BinomialGenerator b;
      b.label = item.at("label").get<std::string>();
      b.lhs = item.at("lhs").get<ExponentVector>();
      b.rhs = item.at("rhs").get<ExponentVector>();
      out.push_back(std::move(b));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed catalog JSON: ") + e.what());
  }
  return out;
}

}  // namespace apsum
