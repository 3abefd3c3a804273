// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_DP_SOLVER_HPP
#define FEWROWS_DP_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fewrows/core.hpp"

namespace fewrows {

// Dynamic program over right-hand-side keys, digit level by digit level.
// Geared toward instances with few rows: tables are sets of m-dimensional
// keys, and their size depends on m, n and the largest matrix entry but not
// on the magnitude of the variable bounds (levels grow only logarithmically
// with the bounds).
struct SolveOptions {
  int threads = 1;  // worker threads for the per-layer merges; results are
                    // identical for every thread count
  std::int64_t max_table_entries = std::int64_t{1} << 27;  // hard capacity lid
};

enum class SolveStatus { Feasible, Infeasible };

struct LevelStats {
  std::int64_t size = 0;     // keys alive after the level's relevance filter
  std::int64_t relaxed = 0;  // merge candidates consumed during the level
};

struct SolveStats {
  int m = 0;
  int n_merged = 0;       // columns after merging identical ones
  std::int64_t delta = 0; // largest matrix entry magnitude
  int h = 0;              // highest digit level
  std::vector<LevelStats> levels;  // h + 1 entries
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  // Objective value of the witness (0 when the instance has no objective).
  std::int64_t value = 0;
  std::optional<Assignment> witness;
  SolveStats stats;
};

// Solves A x = b, lower <= x <= upper, maximizing the objective when one is
// present. Throws std::invalid_argument for malformed instances and
// CapacityError when keys, values or tables would exceed 64-bit/configured
// limits. A feasible result always carries a witness that satisfies the
// instance exactly (this is re-checked internally).
SolveResult solve(const IlpInstance& inst, const SolveOptions& opt = {});
SolveResult solve(const BinaryIlpInstance& inst, const SolveOptions& opt = {});

}  // namespace fewrows

#endif  // FEWROWS_DP_SOLVER_HPP
