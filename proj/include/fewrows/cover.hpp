// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_COVER_HPP
#define FEWROWS_COVER_HPP

#include <cstdint>
#include <vector>

#include "fewrows/core.hpp"

namespace fewrows {

// Digit bounds c_0..c_h in {0,1,2} with
//   { sum_i 2^i * z_i : 0 <= z_i <= c_i } = {0, 1, ..., k}.
// Construction: split k at h' = floor(log2 k) into B = 2^h' - 1 (all low bits
// set) and T = k - B, and add their binary digits; positions above h' are
// zero-padded. For k = 0 every digit is 0.
struct CoverCoeffs {
  std::int64_t k = 0;
  int h = 0;                  // highest digit index; coeffs.size() == h + 1
  std::vector<int> coeffs;    // c_0..c_h, each in {0,1,2}
  std::int64_t bottom = 0;    // B
  std::int64_t top = 0;       // T = k - B
};

// Per-level digit bounds for every column of an instance, at the common
// height h = floor(log2 max_i upper_i) (0 when all bounds are <= 1).
struct LevelBounds {
  int h = 0;
  // bounds[j][i] = c_j(upper_i); h+1 levels, each with one entry per column.
  std::vector<std::vector<int>> bounds;
};

// Throws std::invalid_argument when k < 0 or h < floor(log2 k).
CoverCoeffs build_cover(std::int64_t k, int h);

// Requires zero lower bounds. Throws std::invalid_argument otherwise.
LevelBounds leveled_bounds(const IlpInstance& inst);

}  // namespace fewrows

#endif  // FEWROWS_COVER_HPP
