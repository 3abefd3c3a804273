// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/relevance.hpp"

#include <stdexcept>

#include "fewrows/checked.hpp"

namespace fewrows {

std::int64_t relevance_bound(int level, int m, int n, std::int64_t delta) {
  if (level < 0 || m < 0 || n < 0 || delta < 0) {
    throw std::invalid_argument("relevance_bound: negative argument");
  }
  if (level > 60) throw CapacityError("relevance level too large for 64-bit keys");
  std::int64_t r = checked_mul(std::int64_t{1} << (level + 2), static_cast<std::int64_t>(m));
  r = checked_mul(r, static_cast<std::int64_t>(n));
  return checked_mul(r, delta);
}

bool is_relevant(const std::int64_t* key, const std::vector<std::int64_t>& b, int level,
                 std::int64_t bound) {
  const std::int64_t modulus = std::int64_t{1} << (level + 1);
  for (std::size_t r = 0; r < b.size(); ++r) {
    std::int64_t v = key[r];
    if (v > bound || v < -bound) return false;
    if (pos_mod(v, modulus) != pos_mod(b[r], modulus)) return false;
  }
  return true;
}

std::int64_t table_size_bound(int m, int n, std::int64_t delta) {
  std::int64_t per_dim = sat_add(sat_mul(sat_mul(4, m), sat_mul(n, delta)), 1);
  std::int64_t total = 1;
  for (int i = 0; i < m; ++i) total = sat_mul(total, per_dim);
  return total;
}

}  // namespace fewrows
