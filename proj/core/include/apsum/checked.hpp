#pragma once

#include <cstdint>
#include <string>

#include "apsum/error.hpp"

// Overflow-checked 64-bit arithmetic. Every closed form and oracle routes
// through these; an overflow is a hard error, never a wraparound.

namespace apsum {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorCode::kOverflow, std::to_string(x) + " + " + std::to_string(y));
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_sub_overflow(x, y, &out)) {
    throw Error(ErrorCode::kOverflow, std::to_string(x) + " - " + std::to_string(y));
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorCode::kOverflow, std::to_string(x) + " * " + std::to_string(y));
  }
  return out;
}

}  // namespace apsum
