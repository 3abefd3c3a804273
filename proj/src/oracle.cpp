// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "fewrows/checked.hpp"

namespace fewrows {
namespace {

void require_valid(const ValidationReport& rep, const char* what) {
  if (!rep.ok) throw std::invalid_argument(std::string(what) + ": " + rep.violations.front());
}

// Number of integers in [lo, hi] (lo <= hi), saturating at int64 max.
std::int64_t span(std::int64_t lo, std::int64_t hi) {
  __int128 w = static_cast<__int128>(hi) - lo + 1;
  if (w > std::numeric_limits<std::int64_t>::max()) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(w);
}

void require_budget(std::int64_t total, std::int64_t budget) {
  if (total > budget) {
    throw CapacityError("enumeration space of " + std::to_string(total) +
                        " candidates exceeds oracle budget " + std::to_string(budget));
  }
}

// Visits every x in [lower, upper] in lexicographic order (last coordinate
// fastest), maintaining A x and the objective value incrementally. visit
// returns false to stop. Returns the number of points visited.
template <typename Visit>
std::int64_t walk_box(const IlpInstance& inst, std::int64_t budget, Visit&& visit) {
  const int n = inst.n;
  const int m = inst.m;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total = sat_mul(total, span(inst.lower[i], inst.upper[i]));
  require_budget(total, budget);

  const std::vector<std::int64_t>* c = inst.objective ? &*inst.objective : nullptr;
  std::vector<std::int64_t> x = inst.lower;
  std::vector<std::int64_t> ax(static_cast<std::size_t>(m), 0);
  std::int64_t obj = 0;
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < m; ++r) ax[r] = checked_add(ax[r], checked_mul(inst.A.at(r, i), x[i]));
    if (c) obj = checked_add(obj, checked_mul((*c)[i], x[i]));
  }

  std::int64_t count = 0;
  while (true) {
    ++count;
    if (!visit(static_cast<const std::vector<std::int64_t>&>(x), ax, obj)) break;
    int p = n - 1;
    while (p >= 0 && x[p] == inst.upper[p]) --p;
    if (p < 0) break;
    x[p] += 1;
    for (int r = 0; r < m; ++r) ax[r] = checked_add(ax[r], inst.A.at(r, p));
    if (c) obj = checked_add(obj, (*c)[p]);
    for (int q = p + 1; q < n; ++q) {
      std::int64_t delta = checked_sub(x[q], inst.lower[q]);
      if (delta == 0) continue;
      for (int r = 0; r < m; ++r) ax[r] = checked_sub(ax[r], checked_mul(inst.A.at(r, q), delta));
      if (c) obj = checked_sub(obj, checked_mul((*c)[q], delta));
      x[q] = inst.lower[q];
    }
  }
  return count;
}

// Visits every candidate string t in {0,1}^n in lexicographic order together
// with the Hamming distances to all input strings.
template <typename Visit>
std::int64_t walk_strings(const ClosestStringInstance& inst, std::int64_t budget, Visit&& visit) {
  const int n = inst.n;
  const int m = inst.m;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total = sat_mul(total, 2);
  require_budget(total, budget);

  std::vector<std::int64_t> t(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) dist[j] += (inst.strings[j][i] != 0) ? 1 : 0;

  std::int64_t count = 0;
  while (true) {
    ++count;
    if (!visit(static_cast<const std::vector<std::int64_t>&>(t), dist)) break;
    int p = n - 1;
    while (p >= 0 && t[p] == 1) --p;
    if (p < 0) break;
    t[p] = 1;
    for (int j = 0; j < m; ++j) dist[j] += (inst.strings[j][p] == 1) ? -1 : 1;
    for (int q = p + 1; q < n; ++q) {
      if (t[q] == 0) continue;
      t[q] = 0;
      for (int j = 0; j < m; ++j) dist[j] += (inst.strings[j][q] == 0) ? -1 : 1;
    }
  }
  return count;
}

std::int64_t max_entry(const std::vector<std::int64_t>& v) {
  std::int64_t best = 0;
  for (std::int64_t e : v) best = std::max(best, e);
  return best;
}

// Visits every coloring in {-1,+1}^n in lexicographic order (-1 < +1, last
// coordinate fastest) together with all set color sums.
template <typename Visit>
std::int64_t walk_colorings(const DiscrepancyInstance& inst, std::int64_t budget, Visit&& visit) {
  const int n = inst.n;
  const int m = inst.m;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total = sat_mul(total, 2);
  require_budget(total, budget);

  std::vector<std::vector<int>> sets_of(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int e : inst.sets[i]) sets_of[e].push_back(i);

  std::vector<std::int64_t> chi(static_cast<std::size_t>(n), -1);
  std::vector<std::int64_t> sums(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) sums[i] = -static_cast<std::int64_t>(inst.sets[i].size());

  std::int64_t count = 0;
  while (true) {
    ++count;
    if (!visit(static_cast<const std::vector<std::int64_t>&>(chi), sums)) break;
    int p = n - 1;
    while (p >= 0 && chi[p] == 1) --p;
    if (p < 0) break;
    chi[p] = 1;
    for (int s : sets_of[p]) sums[s] += 2;
    for (int q = p + 1; q < n; ++q) {
      if (chi[q] == -1) continue;
      chi[q] = -1;
      for (int s : sets_of[q]) sums[s] -= 2;
    }
  }
  return count;
}

std::int64_t max_abs_entry_of(const std::vector<std::int64_t>& v) {
  std::int64_t best = 0;
  for (std::int64_t e : v) best = std::max(best, e < 0 ? -e : e);
  return best;
}

// Visits every selection in {0,1}^n in lexicographic order together with
// per-element coverage counts and the number of chosen sets.
template <typename Visit>
std::int64_t walk_selections(const SetSystemInstance& inst, std::int64_t budget, Visit&& visit) {
  const int n = inst.n;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total = sat_mul(total, 2);
  require_budget(total, budget);

  std::vector<std::int64_t> z(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> cov(static_cast<std::size_t>(inst.m), 0);
  std::int64_t chosen = 0;

  std::int64_t count = 0;
  while (true) {
    ++count;
    if (!visit(static_cast<const std::vector<std::int64_t>&>(z), cov, chosen)) break;
    int p = n - 1;
    while (p >= 0 && z[p] == 1) --p;
    if (p < 0) break;
    z[p] = 1;
    ++chosen;
    for (int e : inst.sets[p]) cov[e] += 1;
    for (int q = p + 1; q < n; ++q) {
      if (z[q] == 0) continue;
      z[q] = 0;
      --chosen;
      for (int e : inst.sets[q]) cov[e] -= 1;
    }
  }
  return count;
}

bool coverage_ok(const SetSystemInstance& inst, const std::vector<std::int64_t>& cov) {
  if (inst.kind == SetSystemKind::Cover) {
    for (std::int64_t c : cov)
      if (c < inst.b) return false;
  } else {
    for (std::int64_t c : cov)
      if (c > inst.b) return false;
  }
  return true;
}

bool cardinality_ok(const SetSystemInstance& inst, std::int64_t chosen) {
  if (!inst.cardinality) return true;
  return inst.kind == SetSystemKind::Cover ? chosen <= *inst.cardinality
                                           : chosen >= *inst.cardinality;
}

// Per-block n-fold solution sets inside [0, cap]^m, with their coupling
// contributions A_i x precomputed.
struct BlockSolutions {
  std::vector<std::vector<std::int64_t>> xs;
  std::vector<std::vector<std::int64_t>> contribs;
};

std::int64_t nfold_cap(const NFoldInstance& inst, const OracleOptions& opt) {
  if (opt.nfold_coord_cap > 0) return opt.nfold_coord_cap;
  int sh = inst.m > 2 ? inst.m - 2 : 0;
  if (sh > 61) sh = 61;  // budget guard below rejects such spaces anyway
  return std::int64_t{1} << sh;
}

BlockSolutions solve_block(const NFoldInstance& inst, int block, std::int64_t cap,
                           std::int64_t budget, std::int64_t& candidates) {
  const int m = inst.m;
  IlpInstance box;
  box.m = m;
  box.n = m;
  box.A = inst.B[block];
  box.b = inst.b[block];
  box.lower.assign(static_cast<std::size_t>(m), 0);
  box.upper.assign(static_cast<std::size_t>(m), cap);
  BlockSolutions out;
  candidates += walk_box(box, budget,
                         [&](const std::vector<std::int64_t>& x,
                             const std::vector<std::int64_t>& bx, std::int64_t) {
                           if (bx != inst.b[block]) return true;
                           std::vector<std::int64_t> contrib(static_cast<std::size_t>(m), 0);
                           for (int r = 0; r < m; ++r)
                             for (int i = 0; i < m; ++i)
                               contrib[r] = checked_add(contrib[r],
                                                        checked_mul(inst.A[block].at(r, i), x[i]));
                           out.xs.push_back(x);
                           out.contribs.push_back(std::move(contrib));
                           return true;
                         });
  return out;
}

// Visits every combination of per-block solutions (blocks in order, earlier
// blocks most significant) together with the total coupling sum.
template <typename Visit>
void walk_combinations(const std::vector<BlockSolutions>& blocks, int m, std::int64_t budget,
                       std::int64_t& candidates, Visit&& visit) {
  const int n = static_cast<int>(blocks.size());
  std::int64_t total = 1;
  for (const auto& bs : blocks) total = sat_mul(total, static_cast<std::int64_t>(bs.xs.size()));
  require_budget(total, budget);
  if (total == 0) return;

  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> sum(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < m; ++r) sum[r] = checked_add(sum[r], blocks[i].contribs[0][r]);

  while (true) {
    ++candidates;
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx), sum)) break;
    int p = n - 1;
    while (p >= 0 && idx[p] + 1 == blocks[p].xs.size()) --p;
    if (p < 0) break;
    idx[p] += 1;
    for (int r = 0; r < m; ++r) {
      sum[r] = checked_add(sum[r], checked_sub(blocks[p].contribs[idx[p]][r],
                                               blocks[p].contribs[idx[p] - 1][r]));
    }
    for (int q = p + 1; q < n; ++q) {
      if (idx[q] == 0) continue;
      for (int r = 0; r < m; ++r) {
        sum[r] = checked_sub(sum[r], checked_sub(blocks[q].contribs[idx[q]][r],
                                                 blocks[q].contribs[0][r]));
      }
      idx[q] = 0;
    }
  }
}

std::vector<std::int64_t> concat_blocks(const std::vector<BlockSolutions>& blocks,
                                        const std::vector<std::size_t>& idx) {
  std::vector<std::int64_t> flat;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& x = blocks[i].xs[idx[i]];
    flat.insert(flat.end(), x.begin(), x.end());
  }
  return flat;
}

void check_pm1(const Pm1System& inst) {
  if (inst.C.rows != inst.m || inst.C.cols != inst.n ||
      inst.c.size() != static_cast<std::size_t>(inst.m)) {
    throw std::invalid_argument("oracle: inconsistent +-1 system dimensions");
  }
  for (std::int64_t e : inst.C.a)
    if (e != 1 && e != -1) throw std::invalid_argument("oracle: +-1 system entry not in {-1,1}");
}

IlpInstance pm1_as_box(const Pm1System& inst) {
  IlpInstance box;
  box.m = inst.m;
  box.n = inst.n;
  box.A = inst.C;
  box.b.assign(static_cast<std::size_t>(inst.m), 0);  // unused by the walk
  box.lower.assign(static_cast<std::size_t>(inst.n), 0);
  box.upper.assign(static_cast<std::size_t>(inst.n), 1);
  return box;
}

bool rows_within(const std::vector<std::int64_t>& lhs, const std::vector<std::int64_t>& rhs) {
  for (std::size_t r = 0; r < lhs.size(); ++r)
    if (lhs[r] > rhs[r]) return false;
  return true;
}

}  // namespace

OracleResult oracle_solve(const IlpInstance& inst, const OracleOptions& opt) {
  require_valid(validate_instance(inst), "oracle");
  OracleResult res;
  const bool has_obj = inst.objective.has_value();
  res.candidates = walk_box(
      inst, opt.budget,
      [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& ax,
          std::int64_t obj) {
        if (ax != inst.b) return true;
        if (!has_obj) {
          res.feasible = true;
          res.witness = Assignment{SolutionKind::Ilp, x};
          return false;  // first hit is the lexicographic minimum
        }
        if (!res.feasible || obj > res.value) {
          res.feasible = true;
          res.value = obj;
          res.witness = Assignment{SolutionKind::Ilp, x};
        }
        return true;
      });
  return res;
}

OracleResult oracle_solve(const BinaryIlpInstance& inst, const OracleOptions& opt) {
  require_valid(validate_instance(inst), "oracle");
  OracleResult res = oracle_solve(inst.as_ilp(), opt);
  if (res.witness) res.witness->kind = SolutionKind::Bilp;
  return res;
}

OracleResult oracle_solve(const ClosestStringInstance& inst, const OracleOptions& opt) {
  require_valid(validate_instance(inst), "oracle");
  OracleResult res;
  if (inst.has_bounds()) {
    res.candidates = walk_strings(
        inst, opt.budget,
        [&](const std::vector<std::int64_t>& t, const std::vector<std::int64_t>& dist) {
          for (int j = 0; j < inst.m; ++j)
            if (dist[j] > inst.bound_for(j)) return true;
          res.feasible = true;
          res.value = max_entry(dist);
          res.witness = Assignment{SolutionKind::CString, t};
          return false;
        });
    return res;
  }
  res.candidates = walk_strings(
      inst, opt.budget,
      [&](const std::vector<std::int64_t>& t, const std::vector<std::int64_t>& dist) {
        std::int64_t worst = max_entry(dist);
        if (!res.feasible || worst < res.value) {
          res.feasible = true;
          res.value = worst;
          res.witness = Assignment{SolutionKind::CString, t};
        }
        return true;
      });
  return res;
}

OracleResult oracle_solve(const DiscrepancyInstance& inst, const OracleOptions& opt) {
  require_valid(validate_instance(inst), "oracle");
  OracleResult res;
  if (inst.target) {
    res.candidates = walk_colorings(
        inst, opt.budget,
        [&](const std::vector<std::int64_t>& chi, const std::vector<std::int64_t>& sums) {
          if (max_abs_entry_of(sums) > *inst.target) return true;
          res.feasible = true;
          res.value = max_abs_entry_of(sums);
          res.witness = Assignment{SolutionKind::Disc, chi};
          return false;
        });
    return res;
  }
  res.candidates = walk_colorings(
      inst, opt.budget,
      [&](const std::vector<std::int64_t>& chi, const std::vector<std::int64_t>& sums) {
        std::int64_t worst = max_abs_entry_of(sums);
        if (!res.feasible || worst < res.value) {
          res.feasible = true;
          res.value = worst;
          res.witness = Assignment{SolutionKind::Disc, chi};
        }
        return true;
      });
  return res;
}

OracleResult oracle_solve(const SetSystemInstance& inst, const OracleOptions& opt) {
  require_valid(validate_instance(inst), "oracle");
  const bool minimize = inst.kind == SetSystemKind::Cover;
  OracleResult res;
  bool found = false;
  std::int64_t best = 0;
  std::optional<Assignment> arg;
  res.candidates = walk_selections(
      inst, opt.budget,
      [&](const std::vector<std::int64_t>& z, const std::vector<std::int64_t>& cov,
          std::int64_t chosen) {
        if (!coverage_ok(inst, cov)) return true;
        if (!found || (minimize ? chosen < best : chosen > best)) {
          found = true;
          best = chosen;
          arg = Assignment{SolutionKind::SetSys, z};
        }
        return true;
      });
  if (found && cardinality_ok(inst, best)) {
    res.feasible = true;
    res.value = best;
    res.witness = std::move(arg);
  }
  return res;
}

OracleResult oracle_solve(const NFoldInstance& inst, const OracleOptions& opt) {
  require_valid(validate_instance(inst), "oracle");
  const std::int64_t cap = nfold_cap(inst, opt);
  OracleResult res;
  std::vector<BlockSolutions> blocks;
  blocks.reserve(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    blocks.push_back(solve_block(inst, i, cap, opt.budget, res.candidates));
    if (blocks.back().xs.empty()) return res;  // block infeasible within the cap
  }
  walk_combinations(blocks, inst.m, opt.budget, res.candidates,
                    [&](const std::vector<std::size_t>& idx, const std::vector<std::int64_t>& sum) {
                      if (sum != inst.b0) return true;
                      res.feasible = true;
                      res.witness = Assignment{SolutionKind::NFold, concat_blocks(blocks, idx)};
                      return false;
                    });
  return res;
}

OracleResult oracle_solve(const Pm1System& inst, const OracleOptions& opt) {
  check_pm1(inst);
  OracleResult res;
  IlpInstance box = pm1_as_box(inst);
  res.candidates =
      walk_box(box, opt.budget,
               [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& cx,
                   std::int64_t) {
                 if (!rows_within(cx, inst.c)) return true;
                 res.feasible = true;
                 res.witness = Assignment{SolutionKind::Pm1, x};
                 return false;
               });
  return res;
}

void for_each_feasible(const IlpInstance& inst, const SolutionFn& fn, const OracleOptions& opt) {
  require_valid(validate_instance(inst), "enumeration");
  walk_box(inst, opt.budget,
           [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& ax,
               std::int64_t) {
             if (ax != inst.b) return true;
             return fn(Assignment{SolutionKind::Ilp, x});
           });
}

void for_each_feasible(const BinaryIlpInstance& inst, const SolutionFn& fn,
                       const OracleOptions& opt) {
  require_valid(validate_instance(inst), "enumeration");
  IlpInstance ilp = inst.as_ilp();
  walk_box(ilp, opt.budget,
           [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& ax,
               std::int64_t) {
             if (ax != ilp.b) return true;
             return fn(Assignment{SolutionKind::Bilp, x});
           });
}

void for_each_feasible(const ClosestStringInstance& inst, const SolutionFn& fn,
                       const OracleOptions& opt) {
  require_valid(validate_instance(inst), "enumeration");
  if (!inst.has_bounds())
    throw std::invalid_argument("enumeration: distance bounds required");
  walk_strings(inst, opt.budget,
               [&](const std::vector<std::int64_t>& t, const std::vector<std::int64_t>& dist) {
                 for (int j = 0; j < inst.m; ++j)
                   if (dist[j] > inst.bound_for(j)) return true;
                 return fn(Assignment{SolutionKind::CString, t});
               });
}

void for_each_feasible(const DiscrepancyInstance& inst, const SolutionFn& fn,
                       const OracleOptions& opt) {
  require_valid(validate_instance(inst), "enumeration");
  if (!inst.target) throw std::invalid_argument("enumeration: discrepancy target required");
  walk_colorings(inst, opt.budget,
                 [&](const std::vector<std::int64_t>& chi, const std::vector<std::int64_t>& sums) {
                   if (max_abs_entry_of(sums) > *inst.target) return true;
                   return fn(Assignment{SolutionKind::Disc, chi});
                 });
}

void for_each_feasible(const SetSystemInstance& inst, const SolutionFn& fn,
                       const OracleOptions& opt) {
  require_valid(validate_instance(inst), "enumeration");
  walk_selections(inst, opt.budget,
                  [&](const std::vector<std::int64_t>& z, const std::vector<std::int64_t>& cov,
                      std::int64_t chosen) {
                    if (!coverage_ok(inst, cov) || !cardinality_ok(inst, chosen)) return true;
                    return fn(Assignment{SolutionKind::SetSys, z});
                  });
}

void for_each_feasible(const NFoldInstance& inst, const SolutionFn& fn, const OracleOptions& opt) {
  require_valid(validate_instance(inst), "enumeration");
  const std::int64_t cap = nfold_cap(inst, opt);
  std::int64_t candidates = 0;
  std::vector<BlockSolutions> blocks;
  blocks.reserve(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    blocks.push_back(solve_block(inst, i, cap, opt.budget, candidates));
    if (blocks.back().xs.empty()) return;
  }
  walk_combinations(blocks, inst.m, opt.budget, candidates,
                    [&](const std::vector<std::size_t>& idx, const std::vector<std::int64_t>& sum) {
                      if (sum != inst.b0) return true;
                      return fn(Assignment{SolutionKind::NFold, concat_blocks(blocks, idx)});
                    });
}

void for_each_feasible(const Pm1System& inst, const SolutionFn& fn, const OracleOptions& opt) {
  check_pm1(inst);
  IlpInstance box = pm1_as_box(inst);
  walk_box(box, opt.budget,
           [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& cx,
               std::int64_t) {
             if (!rows_within(cx, inst.c)) return true;
             return fn(Assignment{SolutionKind::Pm1, x});
           });
}

}  // namespace fewrows
