// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/lp_vertex.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fewrows {
namespace {

using boost::multiprecision::cpp_int;

std::int64_t to_int64(const cpp_int& v) {
  if (v > cpp_int(kMagnitudeCap) || v < -cpp_int(kMagnitudeCap)) {
    throw CapacityError("rational bound exceeds the magnitude cap");
  }
  return static_cast<std::int64_t>(v);
}

// Bounded-variable phase-1 simplex state. Columns 0..n-1 are the original
// variables, n..n+m-1 the sign-adjusted artificials (minimized to zero).
struct Simplex {
  int m, n, total;
  std::vector<std::vector<Rational>> D;  // m x (total+1); last column is B^-1 b
  std::vector<Rational> lo, hi;          // variable bounds
  std::vector<bool> no_upper;            // artificials have no upper bound
  std::vector<int> basis;                // variable index per row
  std::vector<bool> in_basis;
  std::vector<bool> at_upper;            // meaningful for nonbasic variables

  Rational bound_value(int j) const { return at_upper[static_cast<std::size_t>(j)] ? hi[static_cast<std::size_t>(j)] : lo[static_cast<std::size_t>(j)]; }

  // Basic values implied by the tableau and the nonbasic bound values.
  std::vector<Rational> basic_values() const {
    std::vector<Rational> xb(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      Rational v = D[static_cast<std::size_t>(i)][static_cast<std::size_t>(total)];
      for (int j = 0; j < total; ++j) {
        if (in_basis[static_cast<std::size_t>(j)]) continue;
        const Rational& d = D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (d != 0) v -= d * bound_value(j);
      }
      xb[static_cast<std::size_t>(i)] = v;
    }
    return xb;
  }

  void pivot(int row, int col) {
    auto& pr = D[static_cast<std::size_t>(row)];
    Rational p = pr[static_cast<std::size_t>(col)];
    for (auto& v : pr) v /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      auto& ri = D[static_cast<std::size_t>(i)];
      Rational f = ri[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j <= total; ++j) {
        ri[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
      }
    }
  }
};

}  // namespace

std::int64_t rational_floor(const Rational& q) {
  cpp_int num = numerator(q), den = denominator(q);  // den > 0 canonically
  cpp_int quo = num / den;                           // truncates toward zero
  if (num < 0 && quo * den != num) --quo;
  return to_int64(quo);
}

std::int64_t rational_ceil(const Rational& q) { return -rational_floor(-q); }

LpVertex lp_vertex(const IlpInstance& inst) {
  ValidationReport report = validate_instance(inst);
  if (!report.ok) throw std::invalid_argument("invalid instance: " + report.violations.front());

  const int m = inst.m, n = inst.n;
  if (m == 0) {
    LpVertex out;
    out.feasible = true;
    out.x.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out.x.emplace_back(inst.lower[static_cast<std::size_t>(j)]);
    return out;
  }

  Simplex s;
  s.m = m;
  s.n = n;
  s.total = n + m;
  s.lo.resize(static_cast<std::size_t>(s.total));
  s.hi.resize(static_cast<std::size_t>(s.total));
  s.no_upper.assign(static_cast<std::size_t>(s.total), false);
  s.at_upper.assign(static_cast<std::size_t>(s.total), false);
  s.in_basis.assign(static_cast<std::size_t>(s.total), false);
  for (int j = 0; j < n; ++j) {
    s.lo[static_cast<std::size_t>(j)] = inst.lower[static_cast<std::size_t>(j)];
    s.hi[static_cast<std::size_t>(j)] = inst.upper[static_cast<std::size_t>(j)];
  }

  // Artificial t_i >= 0 with column sigma_i * e_i, sigma_i the sign of the
  // start residual, so the initial basis (the artificials) is feasible.
  std::vector<Rational> residual(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Rational r = inst.b[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      r -= Rational(inst.A.at(i, j)) * s.lo[static_cast<std::size_t>(j)];
    }
    residual[static_cast<std::size_t>(i)] = r;
  }
  // Artificials are unbounded above while basic, so they can only ever leave
  // the basis at zero; they are then pinned to [0,0] for good.
  s.D.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(s.total) + 1, Rational(0)));
  s.basis.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int sigma = residual[static_cast<std::size_t>(i)] < 0 ? -1 : 1;
    auto& row = s.D[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = Rational(sigma * inst.A.at(i, j));
    row[static_cast<std::size_t>(n + i)] = 1;
    row[static_cast<std::size_t>(s.total)] = Rational(sigma) * Rational(inst.b[static_cast<std::size_t>(i)]);
    s.lo[static_cast<std::size_t>(n + i)] = 0;
    s.no_upper[static_cast<std::size_t>(n + i)] = true;
    s.basis[static_cast<std::size_t>(i)] = n + i;
    s.in_basis[static_cast<std::size_t>(n + i)] = true;
  }

  // Phase 1: minimize the sum of artificials via Bland's rule.
  const long max_iterations = 200000L + 64L * static_cast<long>(m + n) * static_cast<long>(m + n);
  for (long iter = 0;; ++iter) {
    if (iter > max_iterations) throw std::logic_error("simplex iteration cap exceeded");
    std::vector<Rational> xb = s.basic_values();

    // Reduced cost of column j: c_j - sum over rows of c_basis * D_ij,
    // with c = 1 exactly on artificial columns.
    int entering = -1;
    int direction = 0;  // +1 increase from lower, -1 decrease from upper
    for (int j = 0; j < s.total && entering < 0; ++j) {
      if (s.in_basis[static_cast<std::size_t>(j)]) continue;
      if (s.lo[static_cast<std::size_t>(j)] == s.hi[static_cast<std::size_t>(j)]) continue;
      Rational rc = j >= n ? 1 : 0;
      for (int i = 0; i < m; ++i) {
        if (s.basis[static_cast<std::size_t>(i)] >= n) rc -= s.D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
      if (!s.at_upper[static_cast<std::size_t>(j)] && rc < 0) {
        entering = j;
        direction = 1;
      } else if (s.at_upper[static_cast<std::size_t>(j)] && rc > 0) {
        entering = j;
        direction = -1;
      }
    }
    if (entering < 0) break;  // optimal

    // Ratio test: how far can the entering variable move before a basic
    // variable hits a bound, or it reaches its own other bound.
    Rational limit = s.hi[static_cast<std::size_t>(entering)] - s.lo[static_cast<std::size_t>(entering)];
    int leave_row = -1;       // -1 = bound-to-bound flip
    int leave_var = entering; // Bland tie-break on variable index
    bool leave_to_upper = false;
    for (int i = 0; i < m; ++i) {
      const Rational& d = s.D[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
      if (d == 0) continue;
      int bvar = s.basis[static_cast<std::size_t>(i)];
      Rational rate = Rational(direction) * d;  // basic value changes by -rate * delta
      Rational room;
      bool hits_upper;
      if (rate > 0) {
        room = (xb[static_cast<std::size_t>(i)] - s.lo[static_cast<std::size_t>(bvar)]) / rate;
        hits_upper = false;
      } else {
        if (s.no_upper[static_cast<std::size_t>(bvar)]) continue;  // can grow freely
        room = (s.hi[static_cast<std::size_t>(bvar)] - xb[static_cast<std::size_t>(i)]) / -rate;
        hits_upper = true;
      }
      if (room < limit || (room == limit && bvar < leave_var)) {
        limit = room;
        leave_row = i;
        leave_var = bvar;
        leave_to_upper = hits_upper;
      }
    }

    if (leave_row < 0) {
      // Bound flip; the tableau is unchanged.
      s.at_upper[static_cast<std::size_t>(entering)] = !s.at_upper[static_cast<std::size_t>(entering)];
      continue;
    }

    int leaving = s.basis[static_cast<std::size_t>(leave_row)];
    s.pivot(leave_row, entering);
    s.basis[static_cast<std::size_t>(leave_row)] = entering;
    s.in_basis[static_cast<std::size_t>(entering)] = true;
    s.in_basis[static_cast<std::size_t>(leaving)] = false;
    s.at_upper[static_cast<std::size_t>(leaving)] = leave_to_upper;
    if (leaving >= n) {
      // An artificial can only leave at zero; it is fixed there for good.
      s.lo[static_cast<std::size_t>(leaving)] = 0;
      s.hi[static_cast<std::size_t>(leaving)] = 0;
      s.no_upper[static_cast<std::size_t>(leaving)] = false;
      s.at_upper[static_cast<std::size_t>(leaving)] = false;
    }
  }

  // Optimum reached: feasible iff every artificial is zero.
  std::vector<Rational> xb = s.basic_values();
  std::vector<Rational> x(static_cast<std::size_t>(s.total));
  for (int j = 0; j < s.total; ++j) {
    if (!s.in_basis[static_cast<std::size_t>(j)]) x[static_cast<std::size_t>(j)] = s.bound_value(j);
  }
  for (int i = 0; i < m; ++i) x[static_cast<std::size_t>(s.basis[static_cast<std::size_t>(i)])] = xb[static_cast<std::size_t>(i)];
  for (int j = n; j < s.total; ++j) {
    if (x[static_cast<std::size_t>(j)] != 0) return LpVertex{};
  }

  // Exactness check: Ax = b and bounds, in rationals.
  for (int i = 0; i < m; ++i) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(inst.A.at(i, j)) * x[static_cast<std::size_t>(j)];
    if (acc != Rational(inst.b[static_cast<std::size_t>(i)])) throw std::logic_error("simplex result violates a row");
  }
  for (int j = 0; j < n; ++j) {
    if (x[static_cast<std::size_t>(j)] < s.lo[static_cast<std::size_t>(j)] || x[static_cast<std::size_t>(j)] > s.hi[static_cast<std::size_t>(j)]) {
      throw std::logic_error("simplex result violates a bound");
    }
  }

  LpVertex out;
  out.feasible = true;
  out.x.assign(x.begin(), x.begin() + n);
  return out;
}

}  // namespace fewrows
