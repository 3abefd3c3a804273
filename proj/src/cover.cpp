// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/cover.hpp"

#include <cassert>
#include <stdexcept>

namespace fewrows {

CoverCoeffs build_cover(std::int64_t k, int h) {
  if (k < 0) throw std::invalid_argument("build_cover: negative k");
  int hmin = floor_log2(k);
  if (h < hmin) {
    throw std::invalid_argument("build_cover: h below floor(log2 k)");
  }
  CoverCoeffs out;
  out.k = k;
  out.h = h;
  out.coeffs.assign(static_cast<std::size_t>(h) + 1, 0);
  if (k == 0) return out;

  // B has the low hmin bits set; T = k - B lies in [1, 2^hmin], so both split
  // parts have digits only at positions 0..hmin and every digit sum is <= 2.
  out.bottom = (std::int64_t{1} << hmin) - 1;
  out.top = k - out.bottom;
  assert(out.top >= 1 && out.top <= (std::int64_t{1} << hmin));
  for (int i = 0; i <= hmin; ++i) {
    int digit = static_cast<int>((out.bottom >> i) & 1) + static_cast<int>((out.top >> i) & 1);
    out.coeffs[static_cast<std::size_t>(i)] = digit;
    assert(digit >= 0 && digit <= 2);
  }
  return out;
}

LevelBounds leveled_bounds(const IlpInstance& inst) {
  for (std::int64_t lo : inst.lower) {
    if (lo != 0) throw std::invalid_argument("leveled_bounds requires zero lower bounds");
  }
  std::int64_t umax = 0;
  for (std::int64_t u : inst.upper) {
    if (u < 0) throw std::invalid_argument("leveled_bounds requires non-negative upper bounds");
    if (u > umax) umax = u;
  }
  LevelBounds out;
  out.h = floor_log2(umax);
  out.bounds.assign(static_cast<std::size_t>(out.h) + 1,
                    std::vector<int>(static_cast<std::size_t>(inst.n), 0));
  for (int c = 0; c < inst.n; ++c) {
    CoverCoeffs cov = build_cover(inst.upper[static_cast<std::size_t>(c)], out.h);
    for (int j = 0; j <= out.h; ++j) {
      out.bounds[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = cov.coeffs[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace fewrows
