// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_RELEVANCE_HPP
#define FEWROWS_RELEVANCE_HPP

#include <cstdint>
#include <vector>

namespace fewrows {

// Radius of the key ball kept after finishing digit level `level`:
// 2^(level+2) * m * n * delta. Throws CapacityError when it does not fit in
// 64 bits; the solver treats that as "instance too large".
std::int64_t relevance_bound(int level, int m, int n, std::int64_t delta);

// A key survives level `level` iff it is congruent to the target b modulo
// 2^(level+1) in every coordinate and lies within the relevance ball. Keys
// produced by the sweep always satisfy the ball bound; the congruence is the
// filter that keeps tables small.
bool is_relevant(const std::int64_t* key, const std::vector<std::int64_t>& b, int level,
                 std::int64_t bound);

// Upper bound on the number of keys any level can hold: one congruence class
// per coordinate inside the ball gives at most (4*m*n*delta + 1)^m keys.
// Saturates at int64 max instead of overflowing.
std::int64_t table_size_bound(int m, int n, std::int64_t delta);

}  // namespace fewrows

#endif  // FEWROWS_RELEVANCE_HPP
