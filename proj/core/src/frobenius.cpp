#include "apsum/frobenius.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "apsum/error.hpp"

namespace apsum {

namespace {

constexpr std::array<int, 5> kT0{1, 2, 3, 5, 6};
constexpr std::array<int, 6> kT1{1, 2, 3, 4, 6, 7};
constexpr std::array<int, 6> kT2{1, 3, 4, 5, 7, 8};
constexpr std::array<int, 8> kT3{1, 2, 4, 5, 6, 7, 8, 9};
constexpr std::array<int, 8> kT4{1, 2, 3, 5, 6, 7, 9, 10};
constexpr std::array<int, 6> kT5{1, 3, 6, 7, 8, 10};
constexpr std::array<int, 4> kT6{1, 2, 8, 9};
constexpr std::array<int, 5> kT7{1, 2, 3, 9, 10};
constexpr std::array<int, 4> kT8{1, 3, 4, 10};
constexpr std::array<int, 4> kT9{1, 2, 4, 5};

constexpr std::array<int, 4> kSmall11{9, 10, 5, 8};
constexpr std::array<int, 4> kSmall12{9, 11, 5, 8};
constexpr std::array<int, 5> kSmall13{9, 11, 12, 5, 8};
constexpr std::array<int, 6> kSmall14{9, 11, 12, 13, 5, 8};
constexpr std::array<int, 5> kSmall15{9, 12, 14, 5, 8};
constexpr std::array<int, 4> kSmall16{14, 15, 5, 8};
constexpr std::array<int, 5> kSmall17{14, 15, 16, 5, 8};
constexpr std::array<int, 5> kSmall18{14, 15, 17, 5, 8};
constexpr std::array<int, 6> kSmall19{14, 15, 17, 18, 5, 8};

constexpr std::int64_t kLargeAThreshold = 20;

void require_gamma5(const ArithmeticSeed& seed) {
  if (seed.m() != 5) {
    throw Error(ErrorCode::kUnsupportedEmbeddingDimension, "PF closed forms exist only for m=5");
  }
  if (seed.a() < kGamma5MinimalA) {
    throw Error(ErrorCode::kBelowMinimalityThreshold, "PF closed forms need a >= 11, got a=" + std::to_string(seed.a()));
  }
}

std::string case_label(const ArithmeticSeed& seed) {
  return "(a,d)=(" + std::to_string(seed.a()) + "," + std::to_string(seed.d()) + ")";
}

}  // namespace

std::string_view to_string(PFSource source) noexcept {
  switch (source) {
    case PFSource::kLargeA: return "largeA";
    case PFSource::kSmallA: return "smallA";
    case PFSource::kOracle: return "oracle";
  }
  return "unknown";
}

std::span<const int> pf_offsets_large_a(int r) {
  switch (r) {
    case 0: return kT0;
    case 1: return kT1;
    case 2: return kT2;
    case 3: return kT3;
    case 4: return kT4;
    case 5: return kT5;
    case 6: return kT6;
    case 7: return kT7;
    case 8: return kT8;
    case 9: return kT9;
  }
  throw Error(ErrorCode::kResidueOutOfRange, "r=" + std::to_string(r) + " outside 0..9");
}

std::span<const int> pf_residues_small_a(std::int64_t a) {
  switch (a) {
    case 11: return kSmall11;
    case 12: return kSmall12;
    case 13: return kSmall13;
    case 14: return kSmall14;
    case 15: return kSmall15;
    case 16: return kSmall16;
    case 17: return kSmall17;
    case 18: return kSmall18;
    case 19: return kSmall19;
  }
  throw Error(ErrorCode::kResidueOutOfRange, "no small-a PF list for a=" + std::to_string(a));
}

PFResult pf_gamma5(const ArithmeticSeed& seed) {
  require_gamma5(seed);
  PFResult result;
  if (seed.a() >= kLargeAThreshold) {
    result.source = PFSource::kLargeA;
    for (int i : pf_offsets_large_a(static_cast<int>(seed.r()))) result.residues.push_back(seed.a() - i);
    result.residues.push_back(5);
    result.residues.push_back(8);
  } else {
    result.source = PFSource::kSmallA;
    for (int n : pf_residues_small_a(seed.a())) result.residues.push_back(n);
  }
  std::sort(result.residues.begin(), result.residues.end());
  result.residues.erase(std::unique(result.residues.begin(), result.residues.end()), result.residues.end());
  for (std::int64_t n : result.residues) result.pf.push_back(phi_values(n, seed).omega);
  std::sort(result.pf.begin(), result.pf.end());
  result.frobenius = result.pf.back();
  result.type_count = static_cast<int>(result.pf.size());
  return result;
}

PFResult pf_oracle(const ArithmeticSeed& seed) {
  PFResult result;
  result.source = PFSource::kOracle;
  result.pf = pseudo_frobenius_oracle(partial_sum_generators(seed));
  result.frobenius = result.pf.back();
  result.type_count = static_cast<int>(result.pf.size());
  return result;
}

std::int64_t frobenius_residue_small_a(const ArithmeticSeed& seed) {
  require_gamma5(seed);
  const std::int64_t a = seed.a();
  const std::int64_t d = seed.d();
  const auto boundary = [&](const char* what) {
    return Error(ErrorCode::kCaseBoundary, case_label(seed) + " sits on the boundary " + what);
  };
  switch (a) {
    case 11:
      if (a == d) throw boundary("a=d");
      if (2 * a == d) throw boundary("a=d/2");
      if (a > d) return 8;
      if (2 * a > d) return 9;
      return 10;
    case 12:
      if (a == 3 * d) throw boundary("a=3d");
      return a > 3 * d ? 8 : 11;
    case 13: return 12;
    case 14: return 13;
    case 15: return 14;
    case 16: return 15;
    case 17:
      if (2 * a == d) throw boundary("2a=d");
      return 2 * a > d ? 15 : 16;
    case 18: return 17;
    case 19: return 18;
  }
  throw Error(ErrorCode::kResidueOutOfRange, "small-a Frobenius list covers 11..19, got a=" + std::to_string(a));
}

std::int64_t frobenius_gamma5(const ArithmeticSeed& seed) {
  require_gamma5(seed);
  if (seed.a() >= kLargeAThreshold) return phi_values(seed.a() - 1, seed).omega;
  return phi_values(frobenius_residue_small_a(seed), seed).omega;
}

}  // namespace apsum
