// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_LP_VERTEX_HPP
#define FEWROWS_LP_VERTEX_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fewrows/core.hpp"

namespace fewrows {

using Rational = boost::multiprecision::cpp_rational;

struct LpVertex {
  bool feasible = false;
  std::vector<Rational> x;  // length n when feasible, empty otherwise
};

// Exact vertex of the continuous relaxation {Ax = b, l <= x <= u}, or
// infeasibility of the relaxation (which implies integer infeasibility).
// Phase-1 bounded-variable simplex over exact rationals; Bland's rule, so it
// terminates without cycling. The returned point satisfies Ax = b exactly and
// has at least n - m coordinates at one of their bounds.
LpVertex lp_vertex(const IlpInstance& inst);

// Largest integer <= q and smallest integer >= q, as 64-bit values.
// Throws CapacityError if the result does not fit.
std::int64_t rational_floor(const Rational& q);
std::int64_t rational_ceil(const Rational& q);

}  // namespace fewrows

#endif  // FEWROWS_LP_VERTEX_HPP
