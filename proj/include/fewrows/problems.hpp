// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_PROBLEMS_HPP
#define FEWROWS_PROBLEMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fewrows/core.hpp"

namespace fewrows {

// Closest String over the binary alphabet: given m strings of length n, find
// t minimizing the maximum Hamming distance, or decide whether per-string
// distance bounds can be met. Bounds are either one uniform d or one d_j per
// string; with neither, the instance asks for the minimum.
struct ClosestStringInstance {
  int m = 0;  // number of strings
  int n = 0;  // string length
  std::vector<std::vector<std::uint8_t>> strings;  // m rows of 0/1
  std::optional<std::int64_t> uniform_bound;
  std::optional<std::vector<std::int64_t>> bounds;  // per-string, clamped to [0, n]

  bool has_bounds() const { return uniform_bound.has_value() || bounds.has_value(); }
  std::int64_t bound_for(int j) const {
    return uniform_bound ? *uniform_bound : (*bounds)[static_cast<std::size_t>(j)];
  }
};

// Combinatorial discrepancy: color the universe {1..n} with +-1 so that every
// set's color sum has small magnitude; either decide "<= d" or minimize.
struct DiscrepancyInstance {
  int m = 0;  // number of sets
  int n = 0;  // universe size
  std::vector<std::vector<int>> sets;  // 0-indexed elements, strictly ascending
  std::optional<std::int64_t> target;  // d >= 0; nullopt = minimize
};

enum class SetSystemKind { Cover, Packing };

// Set multi-cover / multi-packing: pick sets so every element is covered at
// least (cover) or at most (packing) b times; minimize resp. maximize the
// number of chosen sets, or decide against the optional cardinality bound.
struct SetSystemInstance {
  SetSystemKind kind = SetSystemKind::Cover;
  int m = 0;  // universe size
  int n = 0;  // number of sets
  std::int64_t b = 0;
  std::optional<std::int64_t> cardinality;  // cover: |I| <= d; packing: |I| >= d
  std::vector<std::vector<int>> sets;  // 0-indexed elements, strictly ascending
};

// n-fold standard form: blocks x^(1..n) in Z_{>=0}^m with B_i x^(i) = b^(i)
// per block and a coupling constraint sum_i A_i x^(i) = b^(0).
struct NFoldInstance {
  int m = 0;  // block dimension (rows and columns of every A_i, B_i)
  int n = 0;  // number of blocks
  std::vector<IntMatrix> A;  // n matrices, m x m
  std::vector<IntMatrix> B;  // n matrices, m x m
  std::vector<std::int64_t> b0;              // coupling right-hand side, length m
  std::vector<std::vector<std::int64_t>> b;  // per-block right-hand sides, each length m
};

// Inequality system C x <= c with C in {-1,+1} over binary x; intermediate
// form used on the way from a 0/1-matrix ILP to Closest String. `n_source`
// is the source variable count (x = first n_source coordinates).
struct Pm1System {
  int m = 0;  // rows of C
  int n = 0;  // columns of C (2 * n_source)
  IntMatrix C;
  std::vector<std::int64_t> c;
  int n_source = 0;
  int m_source = 0;
};

ValidationReport validate_instance(const ClosestStringInstance& inst);
ValidationReport validate_instance(const DiscrepancyInstance& inst);
ValidationReport validate_instance(const SetSystemInstance& inst);
ValidationReport validate_instance(const NFoldInstance& inst);

ValidationReport verify_solution(const ClosestStringInstance& inst, const Assignment& sol);
ValidationReport verify_solution(const DiscrepancyInstance& inst, const Assignment& sol);
ValidationReport verify_solution(const SetSystemInstance& inst, const Assignment& sol);
ValidationReport verify_solution(const NFoldInstance& inst, const Assignment& sol);
ValidationReport verify_solution(const Pm1System& inst, const Assignment& sol);

}  // namespace fewrows

#endif  // FEWROWS_PROBLEMS_HPP
