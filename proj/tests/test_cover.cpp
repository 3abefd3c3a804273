// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fewrows/cover.hpp"

using namespace fewrows;

namespace {

// Exact reachability of digit bounds c_0..c_h: the set of sums
// { sum_i t_i 2^i : 0 <= t_i <= c_i } must be {0, ..., k}.
bool covers_exactly(const std::vector<int>& coeffs, std::int64_t k) {
  std::vector<char> reach(static_cast<std::size_t>(k) + 1, 0);
  reach[0] = 1;
  std::int64_t top = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t step = std::int64_t{1} << i;
    for (int t = 1; t <= coeffs[i]; ++t) {
      // Sweep high-to-low so each digit is used at most coeffs[i] times.
      for (std::int64_t v = k; v >= step; --v) {
        if (reach[static_cast<std::size_t>(v - step)]) {
          if (!reach[static_cast<std::size_t>(v)]) reach[static_cast<std::size_t>(v)] = 1;
        }
      }
    }
    top += step * coeffs[i];
    if (top > 4 * k + 4) return false;  // wildly overshooting can only mean a bug
  }
  if (top != k && k > 0) return false;  // max reachable sum must be exactly k
  for (std::int64_t v = 0; v <= k; ++v) {
    if (!reach[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_cover digit values for small k") {
  CHECK(build_cover(0, 0).coeffs == std::vector<int>{0});
  CHECK(build_cover(0, 2).coeffs == std::vector<int>{0, 0, 0});
  CHECK(build_cover(1, 0).coeffs == std::vector<int>{1});
  CHECK(build_cover(2, 1).coeffs == std::vector<int>{2, 0});
  CHECK(build_cover(3, 1).coeffs == std::vector<int>{1, 1});
  CHECK(build_cover(4, 2).coeffs == std::vector<int>{2, 1, 0});
  CHECK(build_cover(5, 2).coeffs == std::vector<int>{1, 2, 0});
  CHECK(build_cover(7, 2).coeffs == std::vector<int>{1, 1, 1});
  CHECK(build_cover(10, 3).coeffs == std::vector<int>{2, 2, 1, 0});
}

TEST_CASE("build_cover splits into bottom and top parts") {
  CoverCoeffs c = build_cover(5, 2);
  CHECK(c.bottom == 3);
  CHECK(c.top == 2);
  CoverCoeffs d = build_cover(8, 3);
  CHECK(d.bottom == 7);
  CHECK(d.top == 1);
}

TEST_CASE("build_cover zero-pads above the natural height") {
  CHECK(build_cover(5, 5).coeffs == std::vector<int>{1, 2, 0, 0, 0, 0});
}

TEST_CASE("build_cover rejects bad arguments") {
  CHECK_THROWS_AS(build_cover(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_cover(8, 2), std::invalid_argument);  // needs h >= 3
}

TEST_CASE("cover digits reach exactly 0..k") {
  for (std::int64_t k = 0; k <= 200; ++k) {
    int hmin = floor_log2(k);
    for (int h : {hmin, hmin + 3}) {
      CoverCoeffs c = build_cover(k, h);
      CAPTURE(k);
      CAPTURE(h);
      CHECK(covers_exactly(c.coeffs, k));
    }
  }
}

TEST_CASE("leveled_bounds lays out digit bounds per level") {
  IlpInstance inst;
  inst.m = 1;
  inst.n = 2;
  inst.A = IntMatrix(1, 2);
  inst.b = {0};
  inst.lower = {0, 0};
  inst.upper = {5, 2};
  LevelBounds lb = leveled_bounds(inst);
  CHECK(lb.h == 2);
  REQUIRE(lb.bounds.size() == 3);
  CHECK(lb.bounds[0] == std::vector<int>{1, 2});
  CHECK(lb.bounds[1] == std::vector<int>{2, 0});
  CHECK(lb.bounds[2] == std::vector<int>{0, 0});
}

TEST_CASE("leveled_bounds handles the all-binary degenerate height") {
  IlpInstance inst;
  inst.m = 0;
  inst.n = 3;
  inst.A = IntMatrix(0, 3);
  inst.lower = {0, 0, 0};
  inst.upper = {1, 1, 0};
  LevelBounds lb = leveled_bounds(inst);
  CHECK(lb.h == 0);
  CHECK(lb.bounds[0] == std::vector<int>{1, 1, 0});
}

TEST_CASE("leveled_bounds rejects nonzero lower bounds") {
  IlpInstance inst;
  inst.m = 0;
  inst.n = 1;
  inst.A = IntMatrix(0, 1);
  inst.lower = {1};
  inst.upper = {2};
  CHECK_THROWS_AS(leveled_bounds(inst), std::invalid_argument);
}
