// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_CHECKED_HPP
#define FEWROWS_CHECKED_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fewrows {

// Every integer the library stores or computes with is a checked signed 64-bit
// value. Instance data must stay strictly below 2^62 in magnitude; intermediate
// arithmetic may use the full int64 range but never wraps silently.
inline constexpr std::int64_t kMagnitudeCap = std::int64_t{1} << 62;

// Raised when a computation exceeds what the implementation can represent or
// is willing to enumerate: 64-bit overflow, table/budget limits, guard
// failures. Deliberately distinct from "infeasible".
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw CapacityError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("integer overflow in multiplication");
  return r;
}

// Saturating multiply/add used only for bound computations where "too big to
// represent" can safely collapse to int64 max (e.g. enumeration-size guards).
inline std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::int64_t>::max();
  return r;
}

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::numeric_limits<std::int64_t>::max();
  return r;
}

// floor(log2(v)) for v >= 1; returns 0 for v in {0,1} (callers treat 0 as the
// degenerate "no doubling needed" height).
inline int floor_log2(std::int64_t v) {
  if (v <= 1) return 0;
  int h = 0;
  while (v > 1) {
    v >>= 1;
    ++h;
  }
  return h;
}

// Smallest k with 2^k >= v, for v >= 1.
inline int ceil_log2(std::int64_t v) {
  if (v <= 1) return 0;
  int h = floor_log2(v);
  return ((std::int64_t{1} << h) == v) ? h : h + 1;
}

// Non-negative remainder of v modulo m (m > 0).
inline std::int64_t pos_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return (r < 0) ? r + m : r;
}

}  // namespace fewrows

#endif  // FEWROWS_CHECKED_HPP
