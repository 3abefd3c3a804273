// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/problems.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fewrows {
namespace {

void require_kind(const Assignment& sol, SolutionKind expected) {
  if (sol.kind != expected) {
    throw std::invalid_argument(std::string("solution kind mismatch: expected ") +
                                solution_kind_tag(expected) + ", got " + solution_kind_tag(sol.kind));
  }
}

ValidationReport validate_sets(int universe, const std::vector<std::vector<int>>& sets) {
  ValidationReport rep;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    int prev = -1;
    for (int e : sets[s]) {
      if (e < 0 || e >= universe) {
        rep.fail("set " + std::to_string(s + 1) + " references element outside the universe");
        break;
      }
      if (e <= prev) {
        rep.fail("set " + std::to_string(s + 1) + " is not strictly ascending");
        break;
      }
      prev = e;
    }
  }
  return rep;
}

}  // namespace

ValidationReport validate_instance(const ClosestStringInstance& inst) {
  ValidationReport rep;
  if (inst.m < 0 || inst.n < 0) {
    rep.fail("negative dimension");
    return rep;
  }
  if (static_cast<int>(inst.strings.size()) != inst.m) rep.fail("string count differs from m");
  for (int j = 0; j < static_cast<int>(inst.strings.size()); ++j) {
    const auto& s = inst.strings[static_cast<std::size_t>(j)];
    if (static_cast<int>(s.size()) != inst.n) rep.fail("string " + std::to_string(j + 1) + " has wrong length");
    for (std::uint8_t ch : s) {
      if (ch > 1) {
        rep.fail("string " + std::to_string(j + 1) + " has a character outside {0,1}");
        break;
      }
    }
  }
  if (inst.uniform_bound && inst.bounds) rep.fail("both uniform and per-string bounds given");
  if (inst.uniform_bound && (*inst.uniform_bound < 0 || *inst.uniform_bound > inst.n)) {
    rep.fail("uniform distance bound outside [0, n]");
  }
  if (inst.bounds) {
    if (static_cast<int>(inst.bounds->size()) != inst.m) rep.fail("per-string bound count differs from m");
    for (std::size_t j = 0; j < inst.bounds->size(); ++j) {
      if ((*inst.bounds)[j] < 0 || (*inst.bounds)[j] > inst.n) {
        rep.fail("distance bound " + std::to_string(j + 1) + " outside [0, n]");
      }
    }
  }
  return rep;
}

ValidationReport validate_instance(const DiscrepancyInstance& inst) {
  ValidationReport rep;
  if (inst.m < 0 || inst.n < 0) {
    rep.fail("negative dimension");
    return rep;
  }
  if (static_cast<int>(inst.sets.size()) != inst.m) rep.fail("set count differs from m");
  ValidationReport sets = validate_sets(inst.n, inst.sets);
  for (auto& v : sets.violations) rep.fail(std::move(v));
  if (inst.target && *inst.target < 0) rep.fail("negative discrepancy target");
  return rep;
}

ValidationReport validate_instance(const SetSystemInstance& inst) {
  ValidationReport rep;
  if (inst.m < 0 || inst.n < 0) {
    rep.fail("negative dimension");
    return rep;
  }
  if (static_cast<int>(inst.sets.size()) != inst.n) rep.fail("set count differs from n");
  ValidationReport sets = validate_sets(inst.m, inst.sets);
  for (auto& v : sets.violations) rep.fail(std::move(v));
  if (inst.b < 0) rep.fail("negative coverage threshold");
  if (inst.cardinality && *inst.cardinality < 0) rep.fail("negative cardinality bound");
  return rep;
}

ValidationReport validate_instance(const NFoldInstance& inst) {
  ValidationReport rep;
  if (inst.m < 0 || inst.n < 0) {
    rep.fail("negative dimension");
    return rep;
  }
  if (static_cast<int>(inst.A.size()) != inst.n || static_cast<int>(inst.B.size()) != inst.n) {
    rep.fail("block count differs from n");
    return rep;
  }
  for (int i = 0; i < inst.n; ++i) {
    if (inst.A[static_cast<std::size_t>(i)].rows != inst.m || inst.A[static_cast<std::size_t>(i)].cols != inst.m ||
        inst.B[static_cast<std::size_t>(i)].rows != inst.m || inst.B[static_cast<std::size_t>(i)].cols != inst.m) {
      rep.fail("block " + std::to_string(i + 1) + " has wrong shape");
    }
  }
  if (static_cast<int>(inst.b0.size()) != inst.m) rep.fail("coupling right-hand side has wrong length");
  if (static_cast<int>(inst.b.size()) != inst.n) rep.fail("per-block right-hand side count differs from n");
  for (std::size_t i = 0; i < inst.b.size(); ++i) {
    if (static_cast<int>(inst.b[i].size()) != inst.m) {
      rep.fail("right-hand side of block " + std::to_string(i + 1) + " has wrong length");
    }
  }
  return rep;
}

ValidationReport verify_solution(const ClosestStringInstance& inst, const Assignment& sol) {
  require_kind(sol, SolutionKind::CString);
  ValidationReport rep;
  if (static_cast<int>(sol.values.size()) != inst.n) {
    rep.fail("candidate string has wrong length");
    return rep;
  }
  for (std::int64_t v : sol.values) {
    if (v != 0 && v != 1) {
      rep.fail("candidate string has a character outside {0,1}");
      return rep;
    }
  }
  std::int64_t worst = 0;
  for (int j = 0; j < inst.m; ++j) {
    std::int64_t dist = 0;
    const auto& s = inst.strings[static_cast<std::size_t>(j)];
    for (int i = 0; i < inst.n; ++i) {
      if (static_cast<std::int64_t>(s[static_cast<std::size_t>(i)]) != sol.values[static_cast<std::size_t>(i)]) ++dist;
    }
    worst = std::max(worst, dist);
    if (inst.has_bounds() && dist > inst.bound_for(j)) {
      rep.fail("distance to string " + std::to_string(j + 1) + " is " + std::to_string(dist) +
               ", bound " + std::to_string(inst.bound_for(j)));
    }
  }
  if (rep.ok) rep.objective = worst;
  return rep;
}

ValidationReport verify_solution(const DiscrepancyInstance& inst, const Assignment& sol) {
  require_kind(sol, SolutionKind::Disc);
  ValidationReport rep;
  if (static_cast<int>(sol.values.size()) != inst.n) {
    rep.fail("coloring has wrong length");
    return rep;
  }
  for (std::int64_t v : sol.values) {
    if (v != 1 && v != -1) {
      rep.fail("coloring has a value outside {-1, +1}");
      return rep;
    }
  }
  std::int64_t worst = 0;
  for (int s = 0; s < inst.m; ++s) {
    std::int64_t sum = 0;
    for (int e : inst.sets[static_cast<std::size_t>(s)]) sum += sol.values[static_cast<std::size_t>(e)];
    std::int64_t mag = std::llabs(sum);
    worst = std::max(worst, mag);
    if (inst.target && mag > *inst.target) {
      rep.fail("set " + std::to_string(s + 1) + " has color sum " + std::to_string(sum) +
               ", target " + std::to_string(*inst.target));
    }
  }
  if (rep.ok) rep.objective = worst;
  return rep;
}

ValidationReport verify_solution(const SetSystemInstance& inst, const Assignment& sol) {
  require_kind(sol, SolutionKind::SetSys);
  ValidationReport rep;
  if (static_cast<int>(sol.values.size()) != inst.n) {
    rep.fail("selection indicator has wrong length");
    return rep;
  }
  for (std::int64_t v : sol.values) {
    if (v != 0 && v != 1) {
      rep.fail("selection indicator has a value outside {0,1}");
      return rep;
    }
  }
  std::vector<std::int64_t> coverage(static_cast<std::size_t>(inst.m), 0);
  std::int64_t chosen = 0;
  for (int s = 0; s < inst.n; ++s) {
    if (sol.values[static_cast<std::size_t>(s)] == 0) continue;
    ++chosen;
    for (int e : inst.sets[static_cast<std::size_t>(s)]) ++coverage[static_cast<std::size_t>(e)];
  }
  for (int e = 0; e < inst.m; ++e) {
    std::int64_t c = coverage[static_cast<std::size_t>(e)];
    if (inst.kind == SetSystemKind::Cover && c < inst.b) {
      rep.fail("element " + std::to_string(e + 1) + " covered " + std::to_string(c) +
               " times, needs at least " + std::to_string(inst.b));
    }
    if (inst.kind == SetSystemKind::Packing && c > inst.b) {
      rep.fail("element " + std::to_string(e + 1) + " covered " + std::to_string(c) +
               " times, allows at most " + std::to_string(inst.b));
    }
  }
  if (inst.cardinality) {
    if (inst.kind == SetSystemKind::Cover && chosen > *inst.cardinality) {
      rep.fail("selection uses " + std::to_string(chosen) + " sets, bound " + std::to_string(*inst.cardinality));
    }
    if (inst.kind == SetSystemKind::Packing && chosen < *inst.cardinality) {
      rep.fail("selection uses " + std::to_string(chosen) + " sets, needs at least " + std::to_string(*inst.cardinality));
    }
  }
  if (rep.ok) rep.objective = chosen;
  return rep;
}

ValidationReport verify_solution(const NFoldInstance& inst, const Assignment& sol) {
  require_kind(sol, SolutionKind::NFold);
  ValidationReport rep;
  if (static_cast<int>(sol.values.size()) != inst.n * inst.m) {
    rep.fail("solution length differs from n*m");
    return rep;
  }
  for (std::int64_t v : sol.values) {
    if (v < 0) {
      rep.fail("negative block coordinate");
      return rep;
    }
  }
  std::vector<std::int64_t> coupling(static_cast<std::size_t>(inst.m), 0);
  for (int i = 0; i < inst.n; ++i) {
    const std::int64_t* x = sol.values.data() + static_cast<std::size_t>(i) * inst.m;
    for (int r = 0; r < inst.m; ++r) {
      std::int64_t brow = 0;
      std::int64_t arow = 0;
      for (int c = 0; c < inst.m; ++c) {
        brow = checked_add(brow, checked_mul(inst.B[static_cast<std::size_t>(i)].at(r, c), x[c]));
        arow = checked_add(arow, checked_mul(inst.A[static_cast<std::size_t>(i)].at(r, c), x[c]));
      }
      if (brow != inst.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]) {
        rep.fail("block " + std::to_string(i + 1) + " violates its row " + std::to_string(r + 1));
      }
      coupling[static_cast<std::size_t>(r)] = checked_add(coupling[static_cast<std::size_t>(r)], arow);
    }
  }
  for (int r = 0; r < inst.m; ++r) {
    if (coupling[static_cast<std::size_t>(r)] != inst.b0[static_cast<std::size_t>(r)]) {
      rep.fail("coupling row " + std::to_string(r + 1) + " evaluates to " +
               std::to_string(coupling[static_cast<std::size_t>(r)]) + ", expected " +
               std::to_string(inst.b0[static_cast<std::size_t>(r)]));
    }
  }
  return rep;
}

ValidationReport verify_solution(const Pm1System& inst, const Assignment& sol) {
  require_kind(sol, SolutionKind::Pm1);
  ValidationReport rep;
  if (static_cast<int>(sol.values.size()) != inst.n) {
    rep.fail("solution length differs from the column count");
    return rep;
  }
  for (std::int64_t v : sol.values) {
    if (v != 0 && v != 1) {
      rep.fail("solution has a value outside {0,1}");
      return rep;
    }
  }
  for (int r = 0; r < inst.m; ++r) {
    std::int64_t sum = 0;
    for (int c = 0; c < inst.n; ++c) {
      sum = checked_add(sum, checked_mul(inst.C.at(r, c), sol.values[static_cast<std::size_t>(c)]));
    }
    if (sum > inst.c[static_cast<std::size_t>(r)]) {
      rep.fail("row " + std::to_string(r + 1) + " evaluates to " + std::to_string(sum) +
               ", exceeds " + std::to_string(inst.c[static_cast<std::size_t>(r)]));
    }
  }
  return rep;
}

}  // namespace fewrows
