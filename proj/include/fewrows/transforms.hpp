// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_TRANSFORMS_HPP
#define FEWROWS_TRANSFORMS_HPP

#include <cstdint>
#include <vector>

#include "fewrows/core.hpp"
#include "fewrows/problems.hpp"
#include "fewrows/trace.hpp"

namespace fewrows {

struct ZeroOneResult {
  IlpInstance instance;  // matrix entries all 0/1
  ReductionTrace trace;  // rule "zero-one"
};

// Rewrites an instance with Delta >= 2 into an equivalent one whose matrix has
// only 0/1 entries. The original variables keep their positions (columns
// 0..n-1 with unchanged bounds and objective); carry variables with symmetric
// box bounds are appended. Solutions project back by coordinate restriction.
// Each original row j becomes 4(k+1) rows, k = ceil(log2 Delta).
// Throws std::invalid_argument when Delta < 2, CapacityError on overflow of
// the carry bound U = (k+2) * sum_i max(|l_i|,|u_i|) * Delta.
ZeroOneResult zero_one_matrix(const IlpInstance& inst);

// Extends a source-feasible x to a target-feasible vector of the transformed
// instance (deterministic carry completion). Used to certify equivalence.
std::vector<std::int64_t> zero_one_complete(const IlpInstance& source,
                                            const std::vector<std::int64_t>& x);

struct BinarizeResult {
  BinaryIlpInstance instance;
  ReductionTrace trace;  // rule "binarize"
};

// Replaces every variable by (u'_i - l'_i) duplicate binary columns after an
// optional exact-LP proximity trim of the bounds. Trimming is skipped (with a
// trace note) when the radius arithmetic would overflow, when bounds are
// already tight, or when an objective is present (a feasible vertex carries
// no optimality information). If the continuous relaxation is infeasible the
// result is a canonical infeasible instance. Throws CapacityError when the
// output would exceed max_columns.
BinarizeResult binarize(const IlpInstance& inst, bool use_proximity,
                        std::int64_t max_columns = std::int64_t{1} << 20);

// Digits lambda_0..lambda_{w-1} in {-2..2} with sum lambda_i 2^i = v.
// Requires |v| <= 2^{w+1} - 2.
std::vector<std::int64_t> signed_digits(std::int64_t v, int w);

// The fixed block matrix of the n-fold embedding: first row e_1 + e_m, second
// row zero, then the 2/-1 staircase. Bx = e_1, x >= 0 has exactly two
// solutions: (0,..,0,1) and (1,2,4,..,2^{m-2},0).
IntMatrix nfold_block_matrix(int m);

struct ToNFoldResult {
  NFoldInstance instance;
  ReductionTrace trace;  // rule "to-nfold"
};

// Embeds a binary ILP into an n-fold program with one block per column; block
// dimension m = max(3, source rows). Requires every |A_{ji}| <= 2^m - 2.
// x_i = 1 in the source corresponds to block i taking the geometric solution.
ToNFoldResult to_nfold(const BinaryIlpInstance& inst);

}  // namespace fewrows

#endif  // FEWROWS_TRANSFORMS_HPP
