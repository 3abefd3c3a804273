// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_ORACLE_HPP
#define FEWROWS_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "fewrows/core.hpp"
#include "fewrows/problems.hpp"

namespace fewrows {

// Reference solvers by plain exhaustive enumeration. Deliberately free of
// pruning cleverness: these exist to check the fast paths, not to be fast.
// If the search space exceeds the budget they refuse (CapacityError) rather
// than ever returning a wrong answer.
struct OracleOptions {
  std::int64_t budget = std::int64_t{1} << 22;  // max candidates to enumerate
  // Per-coordinate search cap for n-fold blocks; 0 = 2^(m-2) (the largest
  // coordinate any block solution produced by the n-fold transform can have).
  // The n-fold oracle searches blocks inside [0, cap]^m by contract.
  std::int64_t nfold_coord_cap = 0;
};

struct OracleResult {
  bool feasible = false;
  // Optimal objective value where the kind has one (ILP objective, min-max
  // distance, min discrepancy, set-selection cardinality); 0 for pure
  // feasibility questions and for infeasible instances.
  std::int64_t value = 0;
  std::optional<Assignment> witness;  // lexicographically smallest optimum
  std::int64_t candidates = 0;        // candidates actually enumerated
};

OracleResult oracle_solve(const IlpInstance& inst, const OracleOptions& opt = {});
OracleResult oracle_solve(const BinaryIlpInstance& inst, const OracleOptions& opt = {});
OracleResult oracle_solve(const ClosestStringInstance& inst, const OracleOptions& opt = {});
OracleResult oracle_solve(const DiscrepancyInstance& inst, const OracleOptions& opt = {});
OracleResult oracle_solve(const SetSystemInstance& inst, const OracleOptions& opt = {});
OracleResult oracle_solve(const NFoldInstance& inst, const OracleOptions& opt = {});
OracleResult oracle_solve(const Pm1System& inst, const OracleOptions& opt = {});

// Invokes `fn` for every feasible assignment, in lexicographic order, at the
// instance's stated bounds/thresholds (decision semantics; Closest String and
// discrepancy instances must carry bounds). Returning false stops early.
using SolutionFn = std::function<bool(const Assignment&)>;
void for_each_feasible(const IlpInstance& inst, const SolutionFn& fn, const OracleOptions& opt = {});
void for_each_feasible(const BinaryIlpInstance& inst, const SolutionFn& fn, const OracleOptions& opt = {});
void for_each_feasible(const ClosestStringInstance& inst, const SolutionFn& fn, const OracleOptions& opt = {});
void for_each_feasible(const DiscrepancyInstance& inst, const SolutionFn& fn, const OracleOptions& opt = {});
void for_each_feasible(const SetSystemInstance& inst, const SolutionFn& fn, const OracleOptions& opt = {});
void for_each_feasible(const NFoldInstance& inst, const SolutionFn& fn, const OracleOptions& opt = {});
void for_each_feasible(const Pm1System& inst, const SolutionFn& fn, const OracleOptions& opt = {});

}  // namespace fewrows

#endif  // FEWROWS_ORACLE_HPP
