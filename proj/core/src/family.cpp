#include "apsum/family.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "apsum/checked.hpp"
#include "apsum/error.hpp"

namespace apsum {

namespace {

std::string seed_label(const ArithmeticSeed& seed) {
  return "(a,d,m)=(" + std::to_string(seed.a()) + "," + std::to_string(seed.d()) + "," +
         std::to_string(seed.m()) + ")";
}

void require_m(const ArithmeticSeed& seed, int m) {
  if (seed.m() != m) {
    throw Error(ErrorCode::kUnsupportedEmbeddingDimension,
                "closed form needs m=" + std::to_string(m) + ", got " + seed_label(seed));
  }
}

void count_expansions(std::span<const std::int64_t> basis, std::size_t index, std::int64_t remaining,
                      std::vector<std::int64_t>& coeffs, UniquenessViolation& acc) {
  if (index + 1 == basis.size()) {
    if (remaining % basis[index] != 0) return;
    coeffs[index] = remaining / basis[index];
    ++acc.count;
    if (acc.expansions.size() < kMaxRecordedExpansions) acc.expansions.push_back(coeffs);
    coeffs[index] = 0;
    return;
  }
  for (std::int64_t k = 0; k * basis[index] <= remaining; ++k) {
    coeffs[index] = k;
    count_expansions(basis, index + 1, remaining - k * basis[index], coeffs, acc);
  }
  coeffs[index] = 0;
}

}  // namespace

ArithmeticSeed ArithmeticSeed::make(std::int64_t a, std::int64_t d, int m) {
  if (a < 2 || d < 1 || m < 2) {
    throw Error(ErrorCode::kInvalidSeed, "need a >= 2, d >= 1, m >= 2; got (a,d,m)=(" + std::to_string(a) +
                                             "," + std::to_string(d) + "," + std::to_string(m) + ")");
  }
  if (std::gcd(a, d) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "gcd(" + std::to_string(a) + "," + std::to_string(d) + ") = " + std::to_string(std::gcd(a, d)));
  }
  return ArithmeticSeed(a, d, m);
}

std::int64_t partial_sum(const ArithmeticSeed& seed, int n) {
  const std::int64_t nn = n;
  return checked_add(checked_mul(nn, seed.a()), checked_mul(nn * (nn - 1) / 2, seed.d()));
}

GeneratorList partial_sum_generators(const ArithmeticSeed& seed) {
  std::vector<std::int64_t> gens;
  gens.reserve(static_cast<std::size_t>(seed.m()));
  for (int n = 1; n <= seed.m(); ++n) gens.push_back(partial_sum(seed, n));
  return GeneratorList::make(std::move(gens));
}

MinimalityReport minimality_check(const ArithmeticSeed& seed) {
  MinimalityReport report;
  if (seed.m() == 5) report.closed_form = seed.a() >= kGamma5MinimalA;
  report.oracle = is_minimally_generated(partial_sum_generators(seed).values());
  return report;
}

RadixDigits5 radix5(std::int64_t n) {
  RadixDigits5 r;
  r.q3 = n / 10;
  r.r3 = n % 10;
  r.q2 = r.r3 / 6;
  r.r2 = r.r3 % 6;
  r.q1 = r.r2 / 3;
  r.r1 = r.r2 % 3;
  return r;
}

std::int64_t mu(std::int64_t n) {
  const auto r = radix5(n);
  std::int64_t value = 2 * r.r1 + 3 * r.q1 + 4 * r.q2 + checked_mul(5, r.q3);
  if (r.r1 == 2 && r.q3 > 0) --value;
  return value;
}

PhiValues phi_values(std::int64_t n, const ArithmeticSeed& seed) {
  if (n < 1 || n > seed.a() - 1) {
    throw Error(ErrorCode::kResidueOutOfRange,
                "n=" + std::to_string(n) + " outside 1.." + std::to_string(seed.a() - 1));
  }
  PhiValues v;
  v.mu = mu(n);
  v.phi = checked_add(checked_mul(v.mu, seed.a()), checked_mul(n, seed.d()));
  v.omega = v.phi - seed.a();
  return v;
}

std::vector<AperyRecord> apery_gamma5(const ArithmeticSeed& seed) {
  require_m(seed, 5);
  if (seed.a() < kGamma5MinimalA) {
    throw Error(ErrorCode::kBelowMinimalityThreshold, "closed-form Apery set needs a >= 11, got " + seed_label(seed));
  }
  std::vector<AperyRecord> records;
  records.reserve(static_cast<std::size_t>(seed.a() - 1));
  for (std::int64_t n = 1; n < seed.a(); ++n) {
    AperyRecord rec;
    rec.n = n;
    rec.digits = radix5(n);
    const auto v = phi_values(n, seed);
    rec.mu = v.mu;
    rec.phi = v.phi;
    rec.omega = v.omega;
    const auto& g = rec.digits;
    if (g.r1 == 2 && g.q3 > 0) {
      // 2 s_2 + s_5 = 2 s_4 + a: trading the pair drops one multiple of a.
      rec.expansion = {0, g.q1, g.q2 + 2, g.q3 - 1};
    } else {
      rec.expansion = {g.r1, g.q1, g.q2, g.q3};
    }
    rec.order = static_cast<int>(rec.expansion[0] + rec.expansion[1] + rec.expansion[2] + rec.expansion[3]);
    records.push_back(rec);
  }
  return records;
}

std::vector<std::int64_t> apery_set_gamma5(const ArithmeticSeed& seed) {
  std::vector<std::int64_t> out{0};
  for (const auto& rec : apery_gamma5(seed)) out.push_back(rec.phi);
  return out;
}

UniquenessReport uniqueness_check(const GeneratorList& gens, std::int64_t c) {
  const auto ap = apery_oracle(gens, c);
  UniquenessReport report;
  for (std::int64_t g : gens.values()) {
    if (g != c) report.basis.push_back(g);
  }
  for (std::int64_t w : ap) {
    UniquenessViolation acc;
    acc.element = w;
    if (report.basis.empty()) {
      acc.count = w == 0 ? 1 : 0;
    } else {
      std::vector<std::int64_t> coeffs(report.basis.size(), 0);
      count_expansions(report.basis, 0, w, coeffs, acc);
    }
    report.counts.push_back({w, acc.count});
    if (acc.count != 1) {
      report.all_unique = false;
      report.violations.push_back(std::move(acc));
    }
  }
  return report;
}

RadixDigits6 radix6(std::int64_t n) {
  RadixDigits6 r;
  r.s4 = n / 15;
  r.t4 = n % 15;
  r.s3 = r.t4 / 10;
  r.t3 = r.t4 % 10;
  r.s2 = r.t3 / 6;
  r.t2 = r.t3 % 6;
  r.s1 = r.t2 / 3;
  r.t1 = r.t2 % 3;
  const auto on_progression = [n](std::int64_t start) { return n >= start && (n - start) % 15 == 0; };
  r.in_s20 = on_progression(20);
  r.in_s = n == 12 || r.in_s20 || on_progression(23) || on_progression(27);
  return r;
}

std::int64_t nu(std::int64_t n) {
  const auto r = radix6(n);
  std::int64_t value = 2 * r.t1 + 3 * r.s1 + 4 * r.s2 + 5 * r.s3 + checked_mul(6, r.s4);
  if (r.in_s20) {
    value -= 3;
  } else if (r.in_s) {
    value -= 1;
  }
  return value;
}

std::vector<std::int64_t> apery_gamma6_conjectured(const ArithmeticSeed& seed) {
  require_m(seed, 6);
  std::vector<std::int64_t> out{0};
  for (std::int64_t n = 1; n < seed.a(); ++n) {
    out.push_back(checked_add(checked_mul(nu(n), seed.a()), checked_mul(n, seed.d())));
  }
  return out;
}

std::vector<std::array<std::int64_t, 4>> nonpositive_relations(std::int64_t c1_max, std::int64_t c2_max,
                                                               std::int64_t c4_max) {
  std::vector<std::array<std::int64_t, 4>> out;
  for (std::int64_t c1 = -2; c1 <= c1_max; ++c1) {
    for (std::int64_t c2 = -1; c2 <= c2_max; ++c2) {
      for (std::int64_t c4 = 0; c4 <= c4_max; ++c4) {
        const std::int64_t rest = 10 * c4 - c1 - 3 * c2;
        if (rest % 6 != 0) continue;
        const std::int64_t c3 = rest / 6;
        if (c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0) continue;
        if (4 * c1 + 3 * c2 + 5 * c4 <= 0) out.push_back({c1, c2, c3, c4});
      }
    }
  }
  return out;
}

}  // namespace apsum
