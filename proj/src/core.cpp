// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/core.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace fewrows {
namespace {

void check_magnitude(ValidationReport& rep, std::int64_t v, const std::string& where) {
  if (v >= kMagnitudeCap || v <= -kMagnitudeCap) {
    rep.fail("magnitude cap exceeded at " + where);
  }
}

void require_kind(const Assignment& sol, SolutionKind expected) {
  if (sol.kind != expected) {
    throw std::invalid_argument(std::string("solution kind mismatch: expected ") +
                                solution_kind_tag(expected) + ", got " + solution_kind_tag(sol.kind));
  }
}

}  // namespace

std::int64_t IlpInstance::max_abs_entry() const {
  std::int64_t d = 0;
  for (std::int64_t v : A.a) d = std::max(d, v < 0 ? -v : v);
  return d;
}

IlpInstance BinaryIlpInstance::as_ilp() const {
  IlpInstance out;
  out.m = m;
  out.n = n;
  out.A = A;
  out.b = b;
  out.lower.assign(static_cast<std::size_t>(n), 0);
  out.upper.assign(static_cast<std::size_t>(n), 1);
  out.objective = objective;
  return out;
}

const char* solution_kind_tag(SolutionKind k) {
  switch (k) {
    case SolutionKind::Ilp: return "ilp";
    case SolutionKind::Bilp: return "bilp";
    case SolutionKind::CString: return "cstring";
    case SolutionKind::Disc: return "disc";
    case SolutionKind::SetSys: return "setsys";
    case SolutionKind::NFold: return "nfold";
    case SolutionKind::Pm1: return "pm1";
  }
  return "ilp";
}

std::optional<SolutionKind> solution_kind_from_tag(const std::string& tag) {
  if (tag == "ilp") return SolutionKind::Ilp;
  if (tag == "bilp") return SolutionKind::Bilp;
  if (tag == "cstring") return SolutionKind::CString;
  if (tag == "disc") return SolutionKind::Disc;
  if (tag == "setsys") return SolutionKind::SetSys;
  if (tag == "nfold") return SolutionKind::NFold;
  if (tag == "pm1") return SolutionKind::Pm1;
  return std::nullopt;
}

ValidationReport validate_instance(const IlpInstance& inst) {
  ValidationReport rep;
  if (inst.m < 0 || inst.n < 0) {
    rep.fail("negative dimension");
    return rep;
  }
  if (inst.A.rows != inst.m || inst.A.cols != inst.n) rep.fail("matrix shape does not match m x n");
  if (static_cast<int>(inst.b.size()) != inst.m) rep.fail("right-hand side length differs from m");
  if (static_cast<int>(inst.lower.size()) != inst.n) rep.fail("lower bound length differs from n");
  if (static_cast<int>(inst.upper.size()) != inst.n) rep.fail("upper bound length differs from n");
  if (inst.objective && static_cast<int>(inst.objective->size()) != inst.n) {
    rep.fail("objective length differs from n");
  }
  if (!rep.ok) return rep;

  for (int r = 0; r < inst.m; ++r) {
    for (int c = 0; c < inst.n; ++c) {
      check_magnitude(rep, inst.A.at(r, c), "A row " + std::to_string(r + 1) + " column " + std::to_string(c + 1));
    }
    check_magnitude(rep, inst.b[static_cast<std::size_t>(r)], "b entry " + std::to_string(r + 1));
  }
  for (int c = 0; c < inst.n; ++c) {
    std::int64_t lo = inst.lower[static_cast<std::size_t>(c)];
    std::int64_t hi = inst.upper[static_cast<std::size_t>(c)];
    check_magnitude(rep, lo, "lower bound " + std::to_string(c + 1));
    check_magnitude(rep, hi, "upper bound " + std::to_string(c + 1));
    if (lo > hi) rep.fail("bound inversion at column " + std::to_string(c + 1));
    if (inst.objective) check_magnitude(rep, (*inst.objective)[static_cast<std::size_t>(c)], "objective entry " + std::to_string(c + 1));
  }
  return rep;
}

ValidationReport validate_instance(const BinaryIlpInstance& inst) {
  ValidationReport rep = validate_instance(inst.as_ilp());
  if (inst.zero_one_matrix) {
    for (int r = 0; r < inst.m && rep.ok; ++r) {
      for (int c = 0; c < inst.n; ++c) {
        std::int64_t v = inst.A.at(r, c);
        if (v != 0 && v != 1) {
          rep.fail("matrix flagged 0/1 but entry at row " + std::to_string(r + 1) + " column " +
                   std::to_string(c + 1) + " is " + std::to_string(v));
          break;
        }
      }
    }
  }
  return rep;
}

ValidationReport verify_solution(const IlpInstance& inst, const Assignment& sol) {
  require_kind(sol, SolutionKind::Ilp);
  ValidationReport rep;
  if (static_cast<int>(sol.values.size()) != inst.n) {
    rep.fail("solution length differs from n");
    return rep;
  }
  for (int c = 0; c < inst.n; ++c) {
    std::int64_t v = sol.values[static_cast<std::size_t>(c)];
    if (v < inst.lower[static_cast<std::size_t>(c)] || v > inst.upper[static_cast<std::size_t>(c)]) {
      rep.fail("bound violated at column " + std::to_string(c + 1));
    }
  }
  for (int r = 0; r < inst.m; ++r) {
    std::int64_t sum = 0;
    for (int c = 0; c < inst.n; ++c) {
      sum = checked_add(sum, checked_mul(inst.A.at(r, c), sol.values[static_cast<std::size_t>(c)]));
    }
    if (sum != inst.b[static_cast<std::size_t>(r)]) {
      rep.fail("row " + std::to_string(r + 1) + " evaluates to " + std::to_string(sum) +
               ", expected " + std::to_string(inst.b[static_cast<std::size_t>(r)]));
    }
  }
  if (rep.ok && inst.objective) {
    std::int64_t val = 0;
    for (int c = 0; c < inst.n; ++c) {
      val = checked_add(val, checked_mul((*inst.objective)[static_cast<std::size_t>(c)], sol.values[static_cast<std::size_t>(c)]));
    }
    rep.objective = val;
  }
  return rep;
}

ValidationReport verify_solution(const BinaryIlpInstance& inst, const Assignment& sol) {
  require_kind(sol, SolutionKind::Bilp);
  Assignment as_ilp_sol{SolutionKind::Ilp, sol.values};
  return verify_solution(inst.as_ilp(), as_ilp_sol);
}

std::pair<IlpInstance, ShiftTrace> shift_to_zero_lower(const IlpInstance& inst) {
  IlpInstance out = inst;
  ShiftTrace trace;
  trace.shift = inst.lower;
  for (int r = 0; r < inst.m; ++r) {
    std::int64_t dot = 0;
    for (int c = 0; c < inst.n; ++c) {
      dot = checked_add(dot, checked_mul(inst.A.at(r, c), inst.lower[static_cast<std::size_t>(c)]));
    }
    out.b[static_cast<std::size_t>(r)] = checked_sub(inst.b[static_cast<std::size_t>(r)], dot);
  }
  for (int c = 0; c < inst.n; ++c) {
    out.upper[static_cast<std::size_t>(c)] =
        checked_sub(inst.upper[static_cast<std::size_t>(c)], inst.lower[static_cast<std::size_t>(c)]);
    out.lower[static_cast<std::size_t>(c)] = 0;
  }
  if (inst.objective) {
    std::int64_t k = 0;
    for (int c = 0; c < inst.n; ++c) {
      k = checked_add(k, checked_mul((*inst.objective)[static_cast<std::size_t>(c)], inst.lower[static_cast<std::size_t>(c)]));
    }
    trace.objective_constant = k;
  }
  return {out, trace};
}

std::pair<IlpInstance, MergeTrace> merge_identical_columns(const IlpInstance& inst) {
  for (std::int64_t lo : inst.lower) {
    if (lo != 0) throw std::invalid_argument("merge_identical_columns requires zero lower bounds");
  }
  MergeTrace trace;
  trace.shift.assign(static_cast<std::size_t>(inst.n), 0);

  // Identity key: the A-column plus the objective entry when present.
  std::map<std::vector<std::int64_t>, int> group_of;
  std::vector<int> group_index;
  group_index.reserve(static_cast<std::size_t>(inst.n));
  for (int c = 0; c < inst.n; ++c) {
    std::vector<std::int64_t> key = inst.A.column(c);
    if (inst.objective) key.push_back((*inst.objective)[static_cast<std::size_t>(c)]);
    auto it = group_of.find(key);
    int g;
    if (it == group_of.end()) {
      g = static_cast<int>(trace.groups.size());
      group_of.emplace(std::move(key), g);
      trace.groups.push_back({});
    } else {
      g = it->second;
    }
    trace.groups[static_cast<std::size_t>(g)].members.push_back(c);
    trace.groups[static_cast<std::size_t>(g)].member_upper.push_back(inst.upper[static_cast<std::size_t>(c)]);
    group_index.push_back(g);
  }

  IlpInstance out;
  out.m = inst.m;
  out.n = static_cast<int>(trace.groups.size());
  out.A = IntMatrix(inst.m, out.n);
  out.b = inst.b;
  out.lower.assign(static_cast<std::size_t>(out.n), 0);
  out.upper.assign(static_cast<std::size_t>(out.n), 0);
  if (inst.objective) out.objective = std::vector<std::int64_t>(static_cast<std::size_t>(out.n), 0);

  for (int g = 0; g < out.n; ++g) {
    const MergeTrace::Group& grp = trace.groups[static_cast<std::size_t>(g)];
    int rep_col = grp.members.front();
    for (int r = 0; r < inst.m; ++r) out.A.at(r, g) = inst.A.at(r, rep_col);
    std::int64_t total = 0;
    for (std::int64_t u : grp.member_upper) total = checked_add(total, u);
    out.upper[static_cast<std::size_t>(g)] = total;
    if (inst.objective) (*out.objective)[static_cast<std::size_t>(g)] = (*inst.objective)[static_cast<std::size_t>(rep_col)];
  }
  (void)group_index;
  return {out, trace};
}

std::vector<std::int64_t> expand_merged(const MergeTrace& trace, const std::vector<std::int64_t>& merged) {
  if (merged.size() != trace.groups.size()) {
    throw std::invalid_argument("merged solution length differs from group count");
  }
  std::size_t n = 0;
  for (const auto& g : trace.groups) n += g.members.size();
  std::vector<std::int64_t> x(n, 0);
  for (std::size_t g = 0; g < trace.groups.size(); ++g) {
    std::int64_t left = merged[g];
    const auto& grp = trace.groups[g];
    for (std::size_t k = 0; k < grp.members.size(); ++k) {
      std::int64_t take = std::min(left, grp.member_upper[k]);
      x[static_cast<std::size_t>(grp.members[k])] = take;
      left -= take;
    }
    if (left != 0) throw std::invalid_argument("merged value exceeds the group's combined bound");
  }
  return x;
}

std::vector<std::int64_t> unshift(const ShiftTrace& trace, const std::vector<std::int64_t>& x) {
  if (x.size() != trace.shift.size()) throw std::invalid_argument("shift length differs from solution length");
  std::vector<std::int64_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = checked_add(x[i], trace.shift[i]);
  return out;
}

}  // namespace fewrows
