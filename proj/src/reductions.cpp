// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "fewrows/checked.hpp"

namespace fewrows {
namespace {

void require_ok(const ValidationReport& rep, const char* op) {
  if (!rep.ok) {
    throw std::invalid_argument(std::string(op) + ": invalid instance: " + rep.violations.front());
  }
}

void require_01_source(const BinaryIlpInstance& inst, const char* op) {
  require_ok(validate_instance(inst), op);
  if (!inst.zero_one_matrix) {
    throw std::invalid_argument(std::string(op) + ": matrix entries must all be 0 or 1");
  }
  if (inst.objective) {
    throw std::invalid_argument(std::string(op) +
                                ": feasibility rewrite cannot carry an objective");
  }
}

// Canonical infeasible shapes, one per kind, used when a precondition on the
// numbers (not on the structure) already decides the answer.
IlpInstance infeasible_ilp() {
  IlpInstance bad;
  bad.m = 1;
  bad.n = 0;
  bad.A = IntMatrix(1, 0);
  bad.b = {1};
  return bad;
}

DiscrepancyInstance infeasible_disc() {
  DiscrepancyInstance bad;
  bad.m = 1;
  bad.n = 1;
  bad.sets = {{0}};  // |chi_1| = 1 > 0 for both colorings
  bad.target = 0;
  return bad;
}

SetSystemInstance infeasible_cover() {
  SetSystemInstance bad;
  bad.kind = SetSystemKind::Cover;
  bad.m = 1;
  bad.n = 0;
  bad.b = 1;  // demand 1, nothing to choose
  bad.cardinality = 0;
  return bad;
}

std::int64_t row_ones(const IntMatrix& a, int row) {
  std::int64_t ones = 0;
  for (int i = 0; i < a.cols; ++i) ones += a.at(row, i);
  return ones;
}

bool is_01(const std::vector<std::int64_t>& v, std::size_t upto) {
  for (std::size_t i = 0; i < upto && i < v.size(); ++i) {
    if (v[i] != 0 && v[i] != 1) return false;
  }
  return true;
}

std::int64_t trace_dim(const ReductionTrace& trace, const char* key) {
  std::int64_t v = trace.scalar(key);
  if (v < 0) throw std::invalid_argument(std::string("pull_back: trace key ") + key + " is negative");
  return v;
}

void expect_kind(const Assignment& sol, SolutionKind kind) {
  if (sol.kind != kind) {
    throw std::invalid_argument(std::string("pull_back: solution kind must be ") +
                                solution_kind_tag(kind) + ", found " +
                                solution_kind_tag(sol.kind));
  }
}

void expect_length(const Assignment& sol, std::int64_t len) {
  if (static_cast<std::int64_t>(sol.values.size()) != len) {
    throw std::invalid_argument("pull_back: solution has " + std::to_string(sol.values.size()) +
                                " values, expected " + std::to_string(len));
  }
}

void expect_binary_prefix(const Assignment& sol, std::int64_t upto) {
  if (!is_01(sol.values, static_cast<std::size_t>(upto))) {
    throw std::invalid_argument("pull_back: solution values must be 0/1");
  }
}

}  // namespace

IlpReduction cstring_to_ilp(const ClosestStringInstance& inst) {
  require_ok(validate_instance(inst), "cstring_to_ilp");
  if (!inst.has_bounds()) {
    throw std::invalid_argument("cstring_to_ilp: instance carries no distance bounds");
  }
  const int m = inst.m, n = inst.n;

  IlpInstance out;
  out.m = m;
  out.n = n + m;
  out.A = IntMatrix(m, n + m);
  out.b.resize(static_cast<std::size_t>(m));
  out.lower.assign(static_cast<std::size_t>(n + m), 0);
  out.upper.assign(static_cast<std::size_t>(n + m), 1);
  for (int j = 0; j < m; ++j) {
    std::int64_t ones = 0;
    for (int i = 0; i < n; ++i) {
      const bool one = inst.strings[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0;
      out.A.at(j, i) = one ? -1 : 1;
      if (one) ++ones;
    }
    const std::int64_t dj = inst.bound_for(j);
    out.A.at(j, n + j) = 1;
    out.upper[static_cast<std::size_t>(n + j)] = dj;
    out.b[static_cast<std::size_t>(j)] = dj - ones;
  }

  ReductionTrace trace;
  trace.rule = "cstring-to-ilp";
  trace.add("m", m);
  trace.add("n", n);
  return IlpReduction{std::move(out), std::move(trace)};
}

Pm1Reduction to_pm1_system(const BinaryIlpInstance& inst) {
  require_01_source(inst, "to_pm1_system");
  const int m = inst.m, n = inst.n;

  Pm1System out;
  out.m = 2 * m + 2;
  out.n = 2 * n;
  out.n_source = n;
  out.m_source = m;
  out.C = IntMatrix(out.m, out.n);
  out.c.resize(static_cast<std::size_t>(out.m));
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < n; ++i) {
      const std::int64_t e = 2 * inst.A.at(r, i) - 1;  // {0,1} -> {-1,+1}
      out.C.at(r, i) = e;
      out.C.at(m + r, i) = -e;
      out.C.at(r, n + i) = -1;
      out.C.at(m + r, n + i) = 1;
    }
    const std::int64_t cr = checked_sub(checked_mul(2, inst.b[static_cast<std::size_t>(r)]), n);
    out.c[static_cast<std::size_t>(r)] = cr;
    out.c[static_cast<std::size_t>(m + r)] = checked_mul(-1, cr);
  }
  for (int i = 0; i < out.n; ++i) {
    out.C.at(2 * m, i) = 1;
    out.C.at(2 * m + 1, i) = -1;
  }
  out.c[static_cast<std::size_t>(2 * m)] = n;
  out.c[static_cast<std::size_t>(2 * m + 1)] = -n;

  ReductionTrace trace;
  trace.rule = "pm1";
  trace.add("m", m);
  trace.add("n", n);
  return Pm1Reduction{std::move(out), std::move(trace)};
}

CStringReduction ilp_to_cstring(const BinaryIlpInstance& inst) {
  Pm1Reduction sys = to_pm1_system(inst);  // validates the source
  const int m = inst.m, n = inst.n;
  const Pm1System& pm = sys.instance;

  ReductionTrace trace;
  trace.rule = "ilp-to-cstring";
  trace.add("m", m);
  trace.add("n", n);

  if (n == 0) {
    // Strings of length 0 cannot express infeasibility; fall back to a fixed
    // two-string instance when some inequality is already violated at z = ().
    bool bad = false;
    for (std::int64_t cr : pm.c) bad = bad || cr < 0;
    ClosestStringInstance out;
    if (bad) {
      out.m = 2;
      out.n = 1;
      out.strings = {{0}, {1}};
      out.uniform_bound = 0;
      trace.add("trivial-infeasible", 1);
    } else {
      out.m = 2 * m + 4;
      out.n = 0;
      out.strings.assign(static_cast<std::size_t>(out.m), {});
      out.uniform_bound = 0;
    }
    return CStringReduction{std::move(out), std::move(trace)};
  }

  ClosestStringInstance out;
  out.m = 2 * m + 4;
  out.n = 6 * n;
  out.strings.reserve(static_cast<std::size_t>(out.m));
  bool bad = false;
  for (int r = 0; r < pm.m; ++r) {
    std::int64_t neg = 0;
    for (int i = 0; i < pm.n; ++i) {
      if (pm.C.at(r, i) == -1) ++neg;
    }
    std::int64_t dr = checked_add(pm.c[static_cast<std::size_t>(r)], neg);
    if (dr < 0) {
      bad = true;
      dr = 0;
    }
    if (dr > 2 * n) dr = 2 * n;
    std::vector<std::uint8_t> s;
    s.reserve(static_cast<std::size_t>(6 * n));
    for (int i = 0; i < pm.n; ++i) s.push_back(pm.C.at(r, i) == 1 ? 0 : 1);
    s.insert(s.end(), static_cast<std::size_t>(n), 1);
    s.insert(s.end(), static_cast<std::size_t>(n), 0);
    s.insert(s.end(), static_cast<std::size_t>(2 * n - dr), 1);
    s.insert(s.end(), static_cast<std::size_t>(dr), 0);
    out.strings.push_back(std::move(s));
  }
  std::vector<std::uint8_t> r1(static_cast<std::size_t>(6 * n), 0);
  std::vector<std::uint8_t> r2(static_cast<std::size_t>(6 * n), 0);
  std::fill(r2.begin(), r2.begin() + 4 * n, 1);
  out.strings.push_back(std::move(r1));
  out.strings.push_back(std::move(r2));
  out.uniform_bound = bad ? 0 : 2 * n;
  if (bad) trace.add("trivial-infeasible", 1);
  return CStringReduction{std::move(out), std::move(trace)};
}

IlpReduction disc_to_ilp(const DiscrepancyInstance& inst, std::int64_t d) {
  require_ok(validate_instance(inst), "disc_to_ilp");
  ReductionTrace trace;
  trace.rule = "disc-to-ilp";
  trace.add("m", inst.m);
  trace.add("n", inst.n);
  trace.add("d", d);
  if (d < 0) {
    trace.add("trivial-infeasible", 1);
    return IlpReduction{infeasible_ilp(), std::move(trace)};
  }
  const int m = inst.m, n = inst.n;

  IlpInstance out;
  out.m = 2 * m;
  out.n = n + 2 * m;
  out.A = IntMatrix(out.m, out.n);
  out.b.resize(static_cast<std::size_t>(out.m));
  out.lower.assign(static_cast<std::size_t>(out.n), 0);
  out.upper.assign(static_cast<std::size_t>(out.n), 1);
  for (int r = 0; r < m; ++r) {
    const auto& set = inst.sets[static_cast<std::size_t>(r)];
    const std::int64_t size = static_cast<std::int64_t>(set.size());
    for (int e : set) {
      out.A.at(2 * r, e) = 2;
      out.A.at(2 * r + 1, e) = -2;
    }
    out.A.at(2 * r, n + 2 * r) = 1;
    out.A.at(2 * r + 1, n + 2 * r + 1) = 1;
    out.b[static_cast<std::size_t>(2 * r)] = checked_add(size, d);
    out.b[static_cast<std::size_t>(2 * r + 1)] = checked_sub(d, size);
    out.upper[static_cast<std::size_t>(n + 2 * r)] = checked_add(d, size);
    out.upper[static_cast<std::size_t>(n + 2 * r + 1)] = checked_add(d, size);
  }
  return IlpReduction{std::move(out), std::move(trace)};
}

DiscrepancyGadget build_equality_gadget(int k) {
  if (k < 1) throw std::invalid_argument("build_equality_gadget: k must be at least 1");
  if (k > 24) throw CapacityError("build_equality_gadget: 2^" + std::to_string(k) + " columns");
  DiscrepancyGadget g;
  g.k = k;
  g.B = IntMatrix(1, 1);
  g.Bbar = IntMatrix(1, 1);
  g.B.at(0, 0) = 1;
  g.Bbar.at(0, 0) = 1;
  for (int step = 0; step < k; ++step) {
    const int rows = g.B.rows, width = g.B.cols;
    IntMatrix nb(rows + 2, 2 * width), nbar(rows + 2, 2 * width);
    for (int r = 0; r < rows; ++r) {
      for (int t = 0; t < width; ++t) {
        nb.at(r, t) = g.B.at(r, t);
        nbar.at(r, t) = g.Bbar.at(r, t);
      }
    }
    // Two crossing rows: each sums one full half of z against the opposite
    // half of zbar, forcing the new halves to copy the old uniform signs.
    for (int t = 0; t < width; ++t) {
      nb.at(rows, t) = 1;
      nbar.at(rows, width + t) = 1;
      nb.at(rows + 1, width + t) = 1;
      nbar.at(rows + 1, t) = 1;
    }
    g.B = std::move(nb);
    g.Bbar = std::move(nbar);
  }
  return g;
}

DiscReduction ilp_to_disc(const BinaryIlpInstance& inst) {
  require_01_source(inst, "ilp_to_disc");
  const int m = inst.m, n = inst.n;

  ReductionTrace trace;
  trace.rule = "ilp-to-disc";
  trace.add("m", m);
  trace.add("n", n);

  std::vector<std::int64_t> bp(static_cast<std::size_t>(m));
  bool wild = false;
  for (int j = 0; j < m; ++j) {
    bp[static_cast<std::size_t>(j)] =
        checked_sub(checked_mul(2, inst.b[static_cast<std::size_t>(j)]), row_ones(inst.A, j));
    wild = wild || std::llabs(bp[static_cast<std::size_t>(j)]) > n;
  }
  if (wild) {
    trace.add("k", 0);
    trace.add("trivial-infeasible", 1);
    return DiscReduction{infeasible_disc(), std::move(trace)};
  }

  const int k = ceil_log2(std::max(n, 2));
  trace.add("k", k);
  DiscrepancyGadget gadget = build_equality_gadget(k);
  const int width = gadget.B.cols;  // 2^k >= n

  DiscrepancyInstance out;
  out.m = m + gadget.B.rows;
  out.n = n + 2 * width;
  out.target = 0;
  out.sets.reserve(static_cast<std::size_t>(out.m));
  for (int j = 0; j < m; ++j) {
    std::vector<int> set;
    for (int i = 0; i < n; ++i) {
      if (inst.A.at(j, i) == 1) set.push_back(i);
    }
    const std::int64_t pad = bp[static_cast<std::size_t>(j)];
    const int base = pad >= 0 ? n : n + width;  // z block for +, zbar for -
    for (std::int64_t t = 0; t < std::llabs(pad); ++t) set.push_back(base + static_cast<int>(t));
    out.sets.push_back(std::move(set));
  }
  for (int r = 0; r < gadget.B.rows; ++r) {
    std::vector<int> set;
    for (int t = 0; t < width; ++t) {
      if (gadget.B.at(r, t) == 1) set.push_back(n + t);
    }
    for (int t = 0; t < width; ++t) {
      if (gadget.Bbar.at(r, t) == 1) set.push_back(n + width + t);
    }
    out.sets.push_back(std::move(set));
  }
  return DiscReduction{std::move(out), std::move(trace)};
}

IlpReduction cover_to_ilp(const SetSystemInstance& inst, std::int64_t d) {
  require_ok(validate_instance(inst), "cover_to_ilp");
  if (inst.kind != SetSystemKind::Cover) {
    throw std::invalid_argument("cover_to_ilp: instance kind must be cover");
  }
  ReductionTrace trace;
  trace.rule = "cover-to-ilp";
  trace.add("m", inst.m);
  trace.add("n", inst.n);
  trace.add("d", d);
  trace.add("b", inst.b);
  if (d < 0) {
    trace.add("trivial-infeasible", 1);
    return IlpReduction{infeasible_ilp(), std::move(trace)};
  }
  const int m = inst.m, n = inst.n;

  IlpInstance out;
  out.m = m + 1;
  out.n = n + 1 + m;
  out.A = IntMatrix(out.m, out.n);
  out.b.assign(static_cast<std::size_t>(out.m), inst.b);
  out.lower.assign(static_cast<std::size_t>(out.n), 0);
  out.upper.assign(static_cast<std::size_t>(out.n), 1);
  for (int i = 0; i < n; ++i) {
    out.A.at(0, i) = 1;
    for (int v : inst.sets[static_cast<std::size_t>(i)]) out.A.at(1 + v, i) = 1;
  }
  out.A.at(0, n) = 1;  // cardinality slack
  out.b[0] = d;
  out.upper[static_cast<std::size_t>(n)] = d;
  for (int v = 0; v < m; ++v) {
    out.A.at(1 + v, n + 1 + v) = -1;  // coverage surplus
    out.upper[static_cast<std::size_t>(n + 1 + v)] = n;
  }
  return IlpReduction{std::move(out), std::move(trace)};
}

SetSystemReduction ilp_to_cover(const BinaryIlpInstance& inst) {
  require_01_source(inst, "ilp_to_cover");
  const int m = inst.m, n = inst.n;
  for (std::int64_t v : inst.b) {
    if (v < 0) throw std::invalid_argument("ilp_to_cover: right-hand side must be non-negative");
  }

  ReductionTrace trace;
  trace.rule = "ilp-to-cover";
  trace.add("m", m);
  trace.add("n", n);
  trace.add("optimum", 3 * static_cast<std::int64_t>(n));

  for (std::int64_t v : inst.b) {
    if (v > n) {
      trace.add("trivial-infeasible", 1);
      return SetSystemReduction{infeasible_cover(), std::move(trace)};
    }
  }

  // Elements: e_j (demand b_j), f_j (demand n - b_j), g (demand n), then one
  // uniformizer h; all demands are lifted to 2n via fresh sets.
  const int eg = 2 * m;      // index of g
  const int eh = 2 * m + 1;  // index of h
  auto demand = [&](int v) -> std::int64_t {
    if (v < m) return inst.b[static_cast<std::size_t>(v)];
    if (v < 2 * m) return n - inst.b[static_cast<std::size_t>(v - m)];
    return n;  // g
  };

  SetSystemInstance out;
  out.kind = SetSystemKind::Cover;
  out.m = 2 * m + 2;
  out.n = 4 * n;
  out.b = 2 * static_cast<std::int64_t>(n);
  out.cardinality = 3 * static_cast<std::int64_t>(n);
  out.sets.reserve(static_cast<std::size_t>(out.n));
  for (int i = 0; i < n; ++i) {  // chosen set i <=> x_i = 1
    std::vector<int> set;
    for (int j = 0; j < m; ++j) {
      if (inst.A.at(j, i) == 1) set.push_back(j);
    }
    for (int j = 0; j < m; ++j) {
      if (inst.A.at(j, i) == 0) set.push_back(m + j);
    }
    set.push_back(eg);
    out.sets.push_back(std::move(set));
  }
  for (int i = 0; i < n; ++i) {  // chosen set n+i <=> x_i = 0
    std::vector<int> set;
    for (int j = 0; j < m; ++j) set.push_back(m + j);
    set.push_back(eg);
    out.sets.push_back(std::move(set));
  }
  for (int t = 0; t < 2 * n; ++t) {  // fresh sets lift every demand to 2n
    std::vector<int> set;
    for (int v = 0; v <= eg; ++v) {
      if (t < 2 * n - demand(v)) set.push_back(v);
    }
    set.push_back(eh);
    out.sets.push_back(std::move(set));
  }
  return SetSystemReduction{std::move(out), std::move(trace)};
}

SetSystemReduction dualize(const SetSystemInstance& inst) {
  require_ok(validate_instance(inst), "dualize");
  const int m = inst.m, n = inst.n;
  if (inst.b > n) throw std::invalid_argument("dualize: threshold exceeds the set count");

  SetSystemInstance out;
  out.kind = inst.kind == SetSystemKind::Cover ? SetSystemKind::Packing : SetSystemKind::Cover;
  out.m = m;
  out.n = n;
  out.b = n - inst.b;
  if (inst.cardinality) {
    out.cardinality = n - std::min<std::int64_t>(*inst.cardinality, n);
  }
  out.sets.reserve(static_cast<std::size_t>(n));
  for (const auto& set : inst.sets) {
    std::vector<int> comp;
    std::size_t pos = 0;
    for (int v = 0; v < m; ++v) {
      if (pos < set.size() && set[pos] == v) {
        ++pos;
      } else {
        comp.push_back(v);
      }
    }
    out.sets.push_back(std::move(comp));
  }

  ReductionTrace trace;
  trace.rule = "dualize";
  trace.add("m", m);
  trace.add("n", n);
  trace.add("b", inst.b);
  return SetSystemReduction{std::move(out), std::move(trace)};
}

Assignment pull_back(const ReductionTrace& trace, const Assignment& sol) {
  if (trace.has("trivial-infeasible") || trace.has("relaxation-infeasible")) {
    throw std::invalid_argument(
        "pull_back: the trace's target instance is canonically infeasible and has no solutions");
  }
  const std::string& rule = trace.rule;
  Assignment out;

  if (rule == "cstring-to-ilp") {
    expect_kind(sol, SolutionKind::Ilp);
    const std::int64_t m = trace_dim(trace, "m"), n = trace_dim(trace, "n");
    expect_length(sol, n + m);
    expect_binary_prefix(sol, n);
    out.kind = SolutionKind::CString;
    out.values.assign(sol.values.begin(), sol.values.begin() + n);
    return out;
  }
  if (rule == "pm1") {
    expect_kind(sol, SolutionKind::Pm1);
    const std::int64_t n = trace_dim(trace, "n");
    expect_length(sol, 2 * n);
    expect_binary_prefix(sol, 2 * n);
    out.kind = SolutionKind::Bilp;
    out.values.assign(sol.values.begin(), sol.values.begin() + n);
    return out;
  }
  if (rule == "ilp-to-cstring") {
    expect_kind(sol, SolutionKind::CString);
    const std::int64_t n = trace_dim(trace, "n");
    expect_length(sol, 6 * n);
    expect_binary_prefix(sol, 6 * n);
    out.kind = SolutionKind::Bilp;
    out.values.assign(sol.values.begin(), sol.values.begin() + n);
    return out;
  }
  if (rule == "disc-to-ilp") {
    expect_kind(sol, SolutionKind::Ilp);
    const std::int64_t m = trace_dim(trace, "m"), n = trace_dim(trace, "n");
    expect_length(sol, n + 2 * m);
    expect_binary_prefix(sol, n);
    out.kind = SolutionKind::Disc;
    for (std::int64_t i = 0; i < n; ++i) {
      out.values.push_back(2 * sol.values[static_cast<std::size_t>(i)] - 1);
    }
    return out;
  }
  if (rule == "ilp-to-disc") {
    expect_kind(sol, SolutionKind::Disc);
    const std::int64_t n = trace_dim(trace, "n"), k = trace_dim(trace, "k");
    const std::int64_t width = std::int64_t{1} << k;
    expect_length(sol, n + 2 * width);
    for (std::int64_t v : sol.values) {
      if (v != 1 && v != -1) throw std::invalid_argument("pull_back: coloring values must be +-1");
    }
    // Orient the coloring so the z block is all -1 (negating a feasible
    // discrepancy-0 coloring keeps it feasible).
    std::int64_t sign = 0;
    for (std::int64_t t = 0; t < width; ++t) {
      const std::int64_t v = sol.values[static_cast<std::size_t>(n + t)];
      if (sign == 0) sign = v;
      if (v != sign) {
        throw std::invalid_argument("pull_back: sign block of the coloring is not uniform");
      }
    }
    const std::int64_t flip = sign == 1 ? -1 : 1;
    out.kind = SolutionKind::Bilp;
    for (std::int64_t i = 0; i < n; ++i) {
      out.values.push_back((1 + flip * sol.values[static_cast<std::size_t>(i)]) / 2);
    }
    return out;
  }
  if (rule == "cover-to-ilp") {
    expect_kind(sol, SolutionKind::Ilp);
    const std::int64_t m = trace_dim(trace, "m"), n = trace_dim(trace, "n");
    expect_length(sol, n + 1 + m);
    expect_binary_prefix(sol, n);
    out.kind = SolutionKind::SetSys;
    out.values.assign(sol.values.begin(), sol.values.begin() + n);
    return out;
  }
  if (rule == "ilp-to-cover") {
    expect_kind(sol, SolutionKind::SetSys);
    const std::int64_t n = trace_dim(trace, "n");
    expect_length(sol, 4 * n);
    expect_binary_prefix(sol, 4 * n);
    out.kind = SolutionKind::Bilp;
    out.values.assign(sol.values.begin(), sol.values.begin() + n);
    return out;
  }
  if (rule == "dualize") {
    expect_kind(sol, SolutionKind::SetSys);
    const std::int64_t n = trace_dim(trace, "n");
    expect_length(sol, n);
    expect_binary_prefix(sol, n);
    out.kind = SolutionKind::SetSys;
    for (std::int64_t v : sol.values) out.values.push_back(1 - v);
    return out;
  }
  if (rule == "zero-one") {
    expect_kind(sol, SolutionKind::Ilp);
    const std::int64_t m = trace_dim(trace, "m"), n = trace_dim(trace, "n");
    const std::int64_t k = trace_dim(trace, "k");
    expect_length(sol, n + m * (5 * k + 4));
    out.kind = SolutionKind::Ilp;
    out.values.assign(sol.values.begin(), sol.values.begin() + n);
    return out;
  }
  if (rule == "binarize") {
    expect_kind(sol, SolutionKind::Bilp);
    const std::vector<std::int64_t>& base = trace.values("base");
    const std::vector<std::int64_t>& count = trace.values("count");
    if (base.size() != count.size()) {
      throw std::invalid_argument("pull_back: binarize trace is inconsistent");
    }
    std::int64_t total = 0;
    for (std::int64_t w : count) {
      if (w < 0) throw std::invalid_argument("pull_back: binarize trace is inconsistent");
      total = checked_add(total, w);
    }
    expect_length(sol, total);
    expect_binary_prefix(sol, total);
    out.kind = SolutionKind::Ilp;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::int64_t x = base[i];
      for (std::int64_t w = 0; w < count[i]; ++w) x += sol.values[pos++];
      out.values.push_back(x);
    }
    return out;
  }
  if (rule == "to-nfold") {
    expect_kind(sol, SolutionKind::NFold);
    const std::int64_t m = trace_dim(trace, "m"), n = trace_dim(trace, "n");
    expect_length(sol, m * n);
    out.kind = SolutionKind::Bilp;
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t lead = sol.values[static_cast<std::size_t>(i * m)];
      if (lead != 0 && lead != 1) {
        throw std::invalid_argument("pull_back: block leads must be 0/1");
      }
      out.values.push_back(lead);
    }
    return out;
  }
  throw std::invalid_argument("pull_back: unknown rule '" + rule + "'");
}

}  // namespace fewrows
