// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/transforms.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "fewrows/lp_vertex.hpp"

namespace fewrows {
namespace {

void require_valid(const IlpInstance& inst) {
  ValidationReport report = validate_instance(inst);
  if (!report.ok) throw std::invalid_argument("invalid instance: " + report.violations.front());
}

// Carry-ladder layout for the 0/1 rewrite. Per original row j and bit level
// i = 0..k there are four rows and five carry families a,d,e,f,g (level k has
// no a). Weighted with +-2^i the four rows telescope to the original row.
struct CarryLayout {
  int n, k;
  int aux_per_row;  // 5(k+1) - 1

  explicit CarryLayout(int n_, int k_) : n(n_), k(k_), aux_per_row(5 * (k_ + 1) - 1) {}

  int rows_per_source() const { return 4 * (k + 1); }
  int row_plus(int j, int i) const { return j * rows_per_source() + 4 * i; }
  int row_plus_shift(int j, int i) const { return row_plus(j, i) + 1; }
  int row_minus(int j, int i) const { return row_plus(j, i) + 2; }
  int row_minus_shift(int j, int i) const { return row_plus(j, i) + 3; }

  enum Family { A = 0, D, E, F, G };
  int aux(int j, int i, Family fam) const {
    int base = n + j * aux_per_row + 5 * i;
    if (i == k) {
      // No carry `a` at the top level.
      return base + static_cast<int>(fam) - 1;
    }
    return base + static_cast<int>(fam);
  }
};

bool bit_set(std::int64_t magnitude, int i) { return (magnitude >> i) & 1; }

}  // namespace

ZeroOneResult zero_one_matrix(const IlpInstance& inst) {
  require_valid(inst);
  const std::int64_t delta = inst.max_abs_entry();
  if (delta < 2) throw std::invalid_argument("rewrite requires a largest entry of at least 2");
  const int k = ceil_log2(delta);
  const int m = inst.m, n = inst.n;

  // Carry capacity: dominates any partial weighted sum of the original row.
  std::int64_t mass = 0;
  for (int t = 0; t < n; ++t) {
    std::int64_t span = std::max(std::llabs(inst.lower[static_cast<std::size_t>(t)]),
                                 std::llabs(inst.upper[static_cast<std::size_t>(t)]));
    mass = checked_add(mass, span);
  }
  const std::int64_t big = checked_mul(checked_mul(static_cast<std::int64_t>(k) + 2, mass), delta);

  CarryLayout lay(n, k);
  IlpInstance out;
  out.m = m * lay.rows_per_source();
  out.n = n + m * lay.aux_per_row;
  out.A = IntMatrix(out.m, out.n);
  out.b.assign(static_cast<std::size_t>(out.m), 0);
  out.lower.assign(static_cast<std::size_t>(out.n), -big);
  out.upper.assign(static_cast<std::size_t>(out.n), big);
  for (int t = 0; t < n; ++t) {
    out.lower[static_cast<std::size_t>(t)] = inst.lower[static_cast<std::size_t>(t)];
    out.upper[static_cast<std::size_t>(t)] = inst.upper[static_cast<std::size_t>(t)];
  }
  if (inst.objective) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(out.n), 0);
    for (int t = 0; t < n; ++t) c[static_cast<std::size_t>(t)] = (*inst.objective)[static_cast<std::size_t>(t)];
    out.objective = std::move(c);
  }

  for (int j = 0; j < m; ++j) {
    out.b[static_cast<std::size_t>(lay.row_plus(j, 0))] = inst.b[static_cast<std::size_t>(j)];
    for (int i = 0; i <= k; ++i) {
      auto& A = out.A;
      const int rp = lay.row_plus(j, i), rps = lay.row_plus_shift(j, i);
      const int rm = lay.row_minus(j, i), rms = lay.row_minus_shift(j, i);
      for (int t = 0; t < n; ++t) {
        std::int64_t entry = inst.A.at(j, t);
        if (entry == 0 || !bit_set(std::llabs(entry), i)) continue;
        A.at(entry > 0 ? rp : rm, t) = 1;
      }
      if (i < k) {
        A.at(rp, lay.aux(j, i, CarryLayout::A)) = 1;
        A.at(rps, lay.aux(j, i, CarryLayout::A)) = 1;
      }
      if (i >= 1) A.at(rm, lay.aux(j, i - 1, CarryLayout::A)) = 1;
      A.at(rp, lay.aux(j, i, CarryLayout::D)) = 1;
      A.at(rms, lay.aux(j, i, CarryLayout::D)) = 1;
      A.at(rps, lay.aux(j, i, CarryLayout::E)) = 1;
      A.at(rm, lay.aux(j, i, CarryLayout::E)) = 1;
      A.at(rps, lay.aux(j, i, CarryLayout::F)) = 1;
      A.at(rm, lay.aux(j, i, CarryLayout::F)) = 1;
      A.at(rp, lay.aux(j, i, CarryLayout::G)) = 1;
      A.at(rm, lay.aux(j, i, CarryLayout::G)) = 1;
    }
  }

  ReductionTrace trace;
  trace.rule = "zero-one";
  trace.add("m", m);
  trace.add("n", n);
  trace.add("k", k);
  trace.add("m-target", out.m);
  trace.add("n-target", out.n);
  trace.add("carry-bound", big);
  return ZeroOneResult{std::move(out), std::move(trace)};
}

std::vector<std::int64_t> zero_one_complete(const IlpInstance& source,
                                            const std::vector<std::int64_t>& x) {
  require_valid(source);
  const std::int64_t delta = source.max_abs_entry();
  if (delta < 2) throw std::invalid_argument("rewrite requires a largest entry of at least 2");
  if (static_cast<int>(x.size()) != source.n) throw std::invalid_argument("source solution length mismatch");
  const int k = ceil_log2(delta);
  CarryLayout lay(source.n, k);

  std::vector<std::int64_t> full(static_cast<std::size_t>(source.n + source.m * lay.aux_per_row), 0);
  for (int t = 0; t < source.n; ++t) full[static_cast<std::size_t>(t)] = x[static_cast<std::size_t>(t)];

  for (int j = 0; j < source.m; ++j) {
    // Per-level signed loads of the row at x.
    std::vector<std::int64_t> load(static_cast<std::size_t>(k) + 1, 0);
    for (int t = 0; t < source.n; ++t) {
      std::int64_t entry = source.A.at(j, t);
      if (entry == 0) continue;
      std::int64_t sign = entry > 0 ? 1 : -1;
      for (int i = 0; i <= k; ++i) {
        if (bit_set(std::llabs(entry), i)) {
          load[static_cast<std::size_t>(i)] = checked_add(
              load[static_cast<std::size_t>(i)], checked_mul(sign, x[static_cast<std::size_t>(t)]));
        }
      }
    }
    // Carries: s_k = 0, s_{i-1} = 2 s_i + load_i; s_{-1} must equal b_j.
    std::vector<std::int64_t> s(static_cast<std::size_t>(k) + 1, 0);
    std::int64_t below = 0;  // s_{i-1} while descending
    for (int i = k; i >= 0; --i) {
      below = checked_add(checked_mul(2, s[static_cast<std::size_t>(i)]), load[static_cast<std::size_t>(i)]);
      if (i > 0) s[static_cast<std::size_t>(i - 1)] = below;
    }
    if (below != source.b[static_cast<std::size_t>(j)]) {
      throw std::invalid_argument("completion requires a source-feasible solution");
    }
    // Split positive/negative loads again for g = rhs - p_i - s_i.
    for (int i = 0; i <= k; ++i) {
      std::int64_t p = 0;
      for (int t = 0; t < source.n; ++t) {
        std::int64_t entry = source.A.at(j, t);
        if (entry > 0 && bit_set(entry, i)) p = checked_add(p, x[static_cast<std::size_t>(t)]);
      }
      std::int64_t si = s[static_cast<std::size_t>(i)];
      std::int64_t rhs = i == 0 ? source.b[static_cast<std::size_t>(j)] : 0;
      if (i < k) full[static_cast<std::size_t>(lay.aux(j, i, CarryLayout::A))] = si;
      full[static_cast<std::size_t>(lay.aux(j, i, CarryLayout::E))] = checked_mul(-1, si);
      full[static_cast<std::size_t>(lay.aux(j, i, CarryLayout::G))] =
          checked_sub(checked_sub(rhs, p), si);
    }
  }
  return full;
}

BinarizeResult binarize(const IlpInstance& inst, bool use_proximity, std::int64_t max_columns) {
  require_valid(inst);
  const int m = inst.m, n = inst.n;
  const std::int64_t delta = inst.max_abs_entry();

  ReductionTrace trace;
  trace.rule = "binarize";
  trace.add("m", m);
  trace.add("n", n);

  std::vector<std::int64_t> lo = inst.lower, hi = inst.upper;
  int trimmed = 0;
  if (use_proximity && m > 0 && !inst.objective) {
    // Trim radius (2*Delta+1)^m; skipped when the arithmetic overflows or the
    // bounds are already within twice the radius.
    std::int64_t radius = 1, rho = 0;
    bool overflow = false;
    try {
      for (int i = 0; i < m; ++i) radius = checked_mul(radius, 2 * delta + 1);
      std::int64_t base = checked_add(checked_mul(checked_mul(2, static_cast<std::int64_t>(m)), delta), 1);
      rho = m;
      for (int i = 0; i < m; ++i) rho = checked_mul(rho, base);
    } catch (const CapacityError&) {
      overflow = true;
    }
    std::int64_t widest = 0;
    for (int t = 0; t < n; ++t) {
      widest = std::max(widest, hi[static_cast<std::size_t>(t)] - lo[static_cast<std::size_t>(t)]);
    }
    if (!overflow && widest > 2 * radius) {
      LpVertex vertex = lp_vertex(inst);
      if (!vertex.feasible) {
        // Empty relaxation: emit a canonical infeasible target.
        BinaryIlpInstance bad;
        bad.m = 1;
        bad.n = 0;
        bad.A = IntMatrix(1, 0);
        bad.b = {1};
        bad.zero_one_matrix = true;
        trace.add("relaxation-infeasible", 1);
        trace.add("trim", 0);
        trace.add("base", lo);
        trace.add("count", std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
        return BinarizeResult{std::move(bad), std::move(trace)};
      }
      for (int t = 0; t < n; ++t) {
        const Rational& xs = vertex.x[static_cast<std::size_t>(t)];
        std::int64_t new_lo = std::max(lo[static_cast<std::size_t>(t)], checked_sub(rational_ceil(xs), radius));
        std::int64_t new_hi = std::min(hi[static_cast<std::size_t>(t)], checked_add(rational_floor(xs), radius));
        lo[static_cast<std::size_t>(t)] = new_lo;
        hi[static_cast<std::size_t>(t)] = new_hi;
        if (new_lo > new_hi) throw std::logic_error("proximity trim produced an empty box");
      }
      trimmed = 1;
    }
    (void)rho;
  }
  trace.add("trim", trimmed);

  std::vector<std::int64_t> width(static_cast<std::size_t>(n));
  std::int64_t total = 0;
  for (int t = 0; t < n; ++t) {
    width[static_cast<std::size_t>(t)] = hi[static_cast<std::size_t>(t)] - lo[static_cast<std::size_t>(t)];
    total = checked_add(total, width[static_cast<std::size_t>(t)]);
  }
  if (total > max_columns || total > (std::int64_t{1} << 28)) {
    throw CapacityError("binary expansion needs " + std::to_string(total) +
                        " columns, above the cap of " + std::to_string(max_columns));
  }

  BinaryIlpInstance out;
  out.m = m;
  out.n = static_cast<int>(total);
  out.A = IntMatrix(m, out.n);
  out.b.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::int64_t shift = 0;
    for (int t = 0; t < n; ++t) {
      shift = checked_add(shift, checked_mul(inst.A.at(i, t), lo[static_cast<std::size_t>(t)]));
    }
    out.b[static_cast<std::size_t>(i)] = checked_sub(inst.b[static_cast<std::size_t>(i)], shift);
  }
  std::int64_t objective_constant = 0;
  std::vector<std::int64_t> c;
  int col = 0;
  for (int t = 0; t < n; ++t) {
    for (std::int64_t d = 0; d < width[static_cast<std::size_t>(t)]; ++d, ++col) {
      for (int i = 0; i < m; ++i) out.A.at(i, col) = inst.A.at(i, t);
      if (inst.objective) c.push_back((*inst.objective)[static_cast<std::size_t>(t)]);
    }
    if (inst.objective) {
      objective_constant = checked_add(
          objective_constant,
          checked_mul((*inst.objective)[static_cast<std::size_t>(t)], lo[static_cast<std::size_t>(t)]));
    }
  }
  if (inst.objective) {
    out.objective = std::move(c);
    trace.add("objective-constant", objective_constant);
  }
  out.zero_one_matrix = true;
  for (std::int64_t v : out.A.a) {
    if (v != 0 && v != 1) out.zero_one_matrix = false;
  }

  trace.add("base", lo);
  trace.add("count", width);
  return BinarizeResult{std::move(out), std::move(trace)};
}

std::vector<std::int64_t> signed_digits(std::int64_t v, int w) {
  if (w < 0) throw std::invalid_argument("digit width must be non-negative");
  std::int64_t magnitude = std::llabs(v);
  if (w >= 62 || magnitude > (std::int64_t{1} << (w + 1)) - 2) {
    throw std::invalid_argument("value out of range for " + std::to_string(w) + " signed digits");
  }
  std::vector<std::int64_t> digits(static_cast<std::size_t>(w), 0);
  std::int64_t rest = magnitude;
  for (int i = w - 1; i >= 0; --i) {
    std::int64_t d = std::min<std::int64_t>(2, rest >> i);
    digits[static_cast<std::size_t>(i)] = v < 0 ? -d : d;
    rest -= d << i;
  }
  if (rest != 0) throw std::logic_error("signed digit expansion left a remainder");
  return digits;
}

IntMatrix nfold_block_matrix(int m) {
  if (m < 3) throw std::invalid_argument("block dimension must be at least 3");
  IntMatrix B(m, m);
  B.at(0, 0) = 1;
  B.at(0, m - 1) = 1;
  // Row 1 is zero; rows 2..m-1 form the staircase 2 x_{i-2} = x_{i-1}.
  for (int r = 2; r < m; ++r) {
    B.at(r, r - 2) = 2;
    B.at(r, r - 1) = -1;
  }
  return B;
}

ToNFoldResult to_nfold(const BinaryIlpInstance& inst) {
  ValidationReport report = validate_instance(inst);
  if (!report.ok) throw std::invalid_argument("invalid instance: " + report.violations.front());
  const int m = std::max(3, inst.m);
  const std::int64_t cap = (std::int64_t{1} << m) - 2;
  for (std::int64_t v : inst.A.a) {
    if (std::llabs(v) > cap) {
      throw std::invalid_argument("matrix entry exceeds the digit range 2^m - 2");
    }
  }

  NFoldInstance out;
  out.m = m;
  out.n = inst.n;
  IntMatrix B = nfold_block_matrix(m);
  out.B.assign(static_cast<std::size_t>(inst.n), B);
  out.A.reserve(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    IntMatrix Ai(m, m);
    for (int j = 0; j < inst.m; ++j) {
      std::vector<std::int64_t> lambda = signed_digits(inst.A.at(j, i), m - 1);
      for (int t = 0; t < m - 1; ++t) Ai.at(j, t) = lambda[static_cast<std::size_t>(t)];
    }
    out.A.push_back(std::move(Ai));
  }
  out.b0.assign(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < inst.m; ++j) out.b0[static_cast<std::size_t>(j)] = inst.b[static_cast<std::size_t>(j)];
  std::vector<std::int64_t> e1(static_cast<std::size_t>(m), 0);
  e1[0] = 1;
  out.b.assign(static_cast<std::size_t>(inst.n), e1);

  ReductionTrace trace;
  trace.rule = "to-nfold";
  trace.add("m", m);
  trace.add("n", inst.n);
  trace.add("source-m", inst.m);
  return ToNFoldResult{std::move(out), std::move(trace)};
}

}  // namespace fewrows
