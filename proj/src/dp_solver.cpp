// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/dp_solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "fewrows/checked.hpp"
#include "fewrows/cover.hpp"
#include "fewrows/relevance.hpp"

namespace fewrows {
namespace {

// One DP table: keys sorted lexicographically and unique, stored flat with m
// entries per key. Each entry carries the best objective value seen for its
// key, the index of the entry it grew from in the previous level's end table,
// and the digit choices (2 bits per column) made during the current level.
struct Table {
  int m = 0;
  int zwords = 0;
  std::vector<std::int64_t> keys;
  std::vector<std::int64_t> values;
  std::vector<std::int32_t> preds;
  std::vector<std::uint64_t> zbits;

  std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
  const std::int64_t* key(std::int64_t e) const {
    return keys.data() + static_cast<std::size_t>(e) * m;
  }
  const std::uint64_t* z(std::int64_t e) const {
    return zbits.data() + static_cast<std::size_t>(e) * zwords;
  }
};

bool lex_less(const std::int64_t* a, const std::int64_t* b, int m) {
  for (int r = 0; r < m; ++r) {
    if (a[r] != b[r]) return a[r] < b[r];
  }
  return false;
}

bool lex_eq(const std::int64_t* a, const std::int64_t* b, int m) {
  for (int r = 0; r < m; ++r) {
    if (a[r] != b[r]) return false;
  }
  return true;
}

bool shifted_less(const std::int64_t* k, const std::vector<std::int64_t>& shift,
                  const std::vector<std::int64_t>& target, int m) {
  for (int r = 0; r < m; ++r) {
    std::int64_t v = k[r] + shift[r];
    if (v != target[r]) return v < target[r];
  }
  return false;
}

// First entry of `in` whose key shifted by `shift` is lexicographically >= target.
std::int64_t lower_bound_shifted(const Table& in, const std::vector<std::int64_t>& shift,
                                 const std::vector<std::int64_t>& target) {
  std::int64_t lo = 0;
  std::int64_t hi = in.size();
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (shifted_less(in.key(mid), shift, target, in.m)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Merges the tcap+1 shifted copies of `in` (copy t adds t * 2^level * column
// to every key) restricted to the given per-stream ranges. Ranges must cover
// the same key interval of the output space, so equal output keys never
// straddle chunk boundaries. Appends to `out`; adds consumed candidates to
// `relaxed`.
void merge_chunk(const Table& in, const std::vector<std::vector<std::int64_t>>& tshift,
                 const std::vector<std::int64_t>& tval, int layer,
                 const std::vector<std::pair<std::int64_t, std::int64_t>>& range, Table& out,
                 std::int64_t max_entries, std::int64_t& relaxed) {
  const int m = in.m;
  const int streams = static_cast<int>(tshift.size());
  const int zw_idx = layer >> 5;
  const unsigned zsh = static_cast<unsigned>(layer & 31) * 2;

  std::vector<std::int64_t> pos(static_cast<std::size_t>(streams));
  std::vector<std::int64_t> end(static_cast<std::size_t>(streams));
  std::vector<std::int64_t> cur(static_cast<std::size_t>(streams) * m);
  auto load = [&](int t) {
    const std::int64_t* k = in.key(pos[t]);
    for (int r = 0; r < m; ++r) cur[static_cast<std::size_t>(t) * m + r] = k[r] + tshift[t][r];
  };
  for (int t = 0; t < streams; ++t) {
    pos[t] = range[t].first;
    end[t] = range[t].second;
    if (pos[t] < end[t]) load(t);
  }

  int eqs[4];
  while (true) {
    int first = -1;
    for (int t = 0; t < streams; ++t) {
      if (pos[t] >= end[t]) continue;
      if (first < 0 || lex_less(&cur[static_cast<std::size_t>(t) * m],
                                &cur[static_cast<std::size_t>(first) * m], m)) {
        first = t;
      }
    }
    if (first < 0) break;

    // All streams sitting on the minimal key are candidates for one output
    // entry; keep the best value, breaking ties toward the smallest digit.
    int neq = 0;
    eqs[neq++] = first;
    int best = first;
    std::int64_t best_val = checked_add(in.values[static_cast<std::size_t>(pos[first])], tval[first]);
    for (int t = first + 1; t < streams; ++t) {
      if (pos[t] >= end[t]) continue;
      if (!lex_eq(&cur[static_cast<std::size_t>(t) * m],
                  &cur[static_cast<std::size_t>(first) * m], m)) {
        continue;
      }
      eqs[neq++] = t;
      std::int64_t v = checked_add(in.values[static_cast<std::size_t>(pos[t])], tval[t]);
      if (v > best_val) {
        best_val = v;
        best = t;
      }
    }
    relaxed += neq;

    out.keys.insert(out.keys.end(), &cur[static_cast<std::size_t>(best) * m],
                    &cur[static_cast<std::size_t>(best) * m] + m);
    out.values.push_back(best_val);
    out.preds.push_back(in.preds[static_cast<std::size_t>(pos[best])]);
    const std::uint64_t* zsrc = in.z(pos[best]);
    std::size_t zb = out.zbits.size();
    out.zbits.insert(out.zbits.end(), zsrc, zsrc + in.zwords);
    out.zbits[zb + static_cast<std::size_t>(zw_idx)] |= static_cast<std::uint64_t>(best) << zsh;
    if (out.size() > max_entries) {
      throw CapacityError("dp table exceeds the table capacity limit");
    }

    for (int k = 0; k < neq; ++k) {
      int t = eqs[k];
      ++pos[t];
      if (pos[t] < end[t]) load(t);
    }
  }
}

void append_table(Table& dst, Table&& src) {
  dst.keys.insert(dst.keys.end(), src.keys.begin(), src.keys.end());
  dst.values.insert(dst.values.end(), src.values.begin(), src.values.end());
  dst.preds.insert(dst.preds.end(), src.preds.begin(), src.preds.end());
  dst.zbits.insert(dst.zbits.end(), src.zbits.begin(), src.zbits.end());
}

// Applies one column's digit choices at the given level: replaces `work` by
// the deduplicated union of its tcap+1 shifted copies. The key space is
// partitioned into per-thread chunks along key order, which keeps the result
// independent of the thread count.
void sweep_layer(Table& work, const IntMatrix& A, const std::vector<std::int64_t>& c, int level,
                 int layer, int tcap, int threads, std::int64_t max_entries,
                 std::int64_t& relaxed) {
  const int m = work.m;
  std::vector<std::int64_t> shift(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) shift[r] = (std::int64_t{1} << level) * A.at(r, layer);
  const std::int64_t valstep = checked_mul(std::int64_t{1} << level, c[layer]);

  const int streams = tcap + 1;
  std::vector<std::vector<std::int64_t>> tshift(static_cast<std::size_t>(streams),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(m)));
  std::vector<std::int64_t> tval(static_cast<std::size_t>(streams));
  for (int t = 0; t < streams; ++t) {
    for (int r = 0; r < m; ++r) tshift[t][r] = t * shift[r];
    tval[t] = checked_mul(t, valstep);
  }

  const std::int64_t size = work.size();
  int chunks = threads;
  if (chunks > 1 && size < 4096) chunks = 1;

  Table out;
  out.m = m;
  out.zwords = work.zwords;

  if (chunks <= 1) {
    std::vector<std::pair<std::int64_t, std::int64_t>> range(static_cast<std::size_t>(streams),
                                                             {0, size});
    merge_chunk(work, tshift, tval, layer, range, out, max_entries, relaxed);
    work = std::move(out);
    return;
  }

  // Split values are input keys at evenly spaced ranks; chunk q holds output
  // keys in [split[q-1], split[q]). They depend only on the data, never on
  // scheduling.
  std::vector<std::vector<std::int64_t>> splits;
  for (int q = 1; q < chunks; ++q) {
    std::int64_t rank = size * q / chunks;
    splits.emplace_back(work.key(rank), work.key(rank) + m);
  }
  // boundary[t][q] = first entry of stream t belonging to chunk q.
  std::vector<std::vector<std::int64_t>> boundary(static_cast<std::size_t>(streams));
  for (int t = 0; t < streams; ++t) {
    boundary[t].resize(static_cast<std::size_t>(chunks) + 1);
    boundary[t][0] = 0;
    boundary[t][static_cast<std::size_t>(chunks)] = size;
    for (int q = 1; q < chunks; ++q) {
      boundary[t][q] = lower_bound_shifted(work, tshift[t], splits[static_cast<std::size_t>(q - 1)]);
    }
  }

  std::vector<Table> outs(static_cast<std::size_t>(chunks));
  std::vector<std::int64_t> relax(static_cast<std::size_t>(chunks), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
  auto run_chunk = [&](int q) {
    try {
      outs[q].m = m;
      outs[q].zwords = work.zwords;
      std::vector<std::pair<std::int64_t, std::int64_t>> range(static_cast<std::size_t>(streams));
      for (int t = 0; t < streams; ++t) range[t] = {boundary[t][q], boundary[t][q + 1]};
      merge_chunk(work, tshift, tval, layer, range, outs[q], max_entries, relax[q]);
    } catch (...) {
      errors[q] = std::current_exception();
    }
  };
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(chunks) - 1);
  for (int q = 1; q < chunks; ++q) workers.emplace_back(run_chunk, q);
  run_chunk(0);
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (int q = 0; q < chunks; ++q) {
    relaxed += relax[q];
    append_table(out, std::move(outs[q]));
    if (out.size() > max_entries) {
      throw CapacityError("dp table exceeds the table capacity limit");
    }
  }
  work = std::move(out);
}

// Keeps only the keys that can still reach the target: congruent to b modulo
// 2^(level+1) and inside the relevance ball.
void filter_level(Table& t, const std::vector<std::int64_t>& b, int level, std::int64_t bound) {
  const int m = t.m;
  const int zw = t.zwords;
  std::int64_t w = 0;
  for (std::int64_t e = 0; e < t.size(); ++e) {
    if (!is_relevant(t.key(e), b, level, bound)) continue;
    if (w != e) {
      std::copy(t.key(e), t.key(e) + m, t.keys.begin() + static_cast<std::ptrdiff_t>(w) * m);
      t.values[static_cast<std::size_t>(w)] = t.values[static_cast<std::size_t>(e)];
      t.preds[static_cast<std::size_t>(w)] = t.preds[static_cast<std::size_t>(e)];
      std::copy(t.z(e), t.z(e) + zw, t.zbits.begin() + static_cast<std::ptrdiff_t>(w) * zw);
    }
    ++w;
  }
  t.keys.resize(static_cast<std::size_t>(w) * m);
  t.values.resize(static_cast<std::size_t>(w));
  t.preds.resize(static_cast<std::size_t>(w));
  t.zbits.resize(static_cast<std::size_t>(w) * zw);
}

std::int64_t find_key(const Table& t, const std::vector<std::int64_t>& target) {
  std::int64_t lo = 0;
  std::int64_t hi = t.size();
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (lex_less(t.key(mid), target.data(), t.m)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < t.size() && lex_eq(t.key(lo), target.data(), t.m)) return lo;
  return -1;
}

// Fresh working table for the next level: same keys and values, predecessors
// pointing at the previous end table entries themselves, digits cleared.
Table start_of_level(const Table& prev_end) {
  Table work;
  work.m = prev_end.m;
  work.zwords = prev_end.zwords;
  work.keys = prev_end.keys;
  work.values = prev_end.values;
  work.preds.resize(prev_end.values.size());
  std::iota(work.preds.begin(), work.preds.end(), 0);
  work.zbits.assign(prev_end.values.size() * static_cast<std::size_t>(prev_end.zwords), 0);
  return work;
}

int digit_of(const Table& t, std::int64_t entry, int column) {
  const std::uint64_t word = t.z(entry)[column >> 5];
  return static_cast<int>((word >> (static_cast<unsigned>(column & 31) * 2)) & 3u);
}

}  // namespace

SolveResult solve(const IlpInstance& inst, const SolveOptions& opt) {
  {
    auto rep = validate_instance(inst);
    if (!rep.ok) throw std::invalid_argument("solve: " + rep.violations.front());
  }
  if (opt.threads < 1 || opt.threads > 256) {
    throw std::invalid_argument("solve: thread count out of range");
  }
  if (opt.max_table_entries < 1 ||
      opt.max_table_entries >= std::numeric_limits<std::int32_t>::max()) {
    throw std::invalid_argument("solve: table capacity limit out of range");
  }

  auto [shifted, strace] = shift_to_zero_lower(inst);
  auto [merged, mtrace] = merge_identical_columns(shifted);
  const LevelBounds lb = leveled_bounds(merged);
  const int m = merged.m;
  const int n = merged.n;
  const int h = lb.h;
  const std::int64_t delta = merged.max_abs_entry();
  // Throws when even the final level's keys cannot be represented in 64 bits;
  // every key the sweep can produce is bounded by this.
  relevance_bound(h, m, n, delta);

  const bool has_obj = inst.objective.has_value();
  const std::vector<std::int64_t> cvec =
      merged.objective ? *merged.objective
                       : std::vector<std::int64_t>(static_cast<std::size_t>(n), 0);

  SolveResult res;
  res.stats.m = m;
  res.stats.n_merged = n;
  res.stats.delta = delta;
  res.stats.h = h;

  const int zwords = std::max(1, (2 * n + 63) / 64);
  Table base;
  base.m = m;
  base.zwords = zwords;
  base.keys.assign(static_cast<std::size_t>(m), 0);
  base.values = {0};
  base.preds = {-1};
  base.zbits.assign(static_cast<std::size_t>(zwords), 0);

  std::vector<Table> saved;
  saved.reserve(static_cast<std::size_t>(h) + 1);
  const Table* prev = &base;
  bool dead = false;
  for (int j = 0; j <= h; ++j) {
    Table work = start_of_level(*prev);
    std::int64_t relaxed = 0;
    for (int i = 0; i < n; ++i) {
      int tcap = lb.bounds[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (tcap == 0) continue;
      sweep_layer(work, merged.A, cvec, j, i, tcap, opt.threads, opt.max_table_entries, relaxed);
    }
    filter_level(work, merged.b, j, relevance_bound(j, m, n, delta));
    res.stats.levels.push_back({work.size(), relaxed});
    saved.push_back(std::move(work));
    if (saved.back().size() == 0) {
      dead = true;
      break;
    }
    prev = &saved.back();
  }
  while (res.stats.levels.size() < static_cast<std::size_t>(h) + 1) {
    res.stats.levels.push_back({0, 0});
  }

  const std::int64_t hit = dead ? -1 : find_key(saved.back(), merged.b);
  if (hit < 0) {
    res.status = SolveStatus::Infeasible;
    return res;
  }

  // Walk the predecessor chain down the levels, reassembling the digits.
  std::vector<std::int64_t> xm(static_cast<std::size_t>(n), 0);
  std::int64_t cur = hit;
  for (int j = h; j >= 0; --j) {
    const Table& t = saved[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      xm[static_cast<std::size_t>(i)] +=
          static_cast<std::int64_t>(digit_of(t, cur, i)) << j;
    }
    cur = t.preds[static_cast<std::size_t>(cur)];
  }
  if (cur != 0) throw std::logic_error("solve: predecessor chain did not reach the base entry");

  // The witness must satisfy the merged system exactly before it is mapped
  // back; anything else is an internal bug, not an input problem.
  for (int i = 0; i < n; ++i) {
    if (xm[static_cast<std::size_t>(i)] < 0 ||
        xm[static_cast<std::size_t>(i)] > merged.upper[static_cast<std::size_t>(i)]) {
      throw std::logic_error("solve: reconstructed witness violates merged bounds");
    }
  }
  for (int r = 0; r < m; ++r) {
    std::int64_t sum = 0;
    for (int i = 0; i < n; ++i) sum += merged.A.at(r, i) * xm[static_cast<std::size_t>(i)];
    if (sum != merged.b[static_cast<std::size_t>(r)]) {
      throw std::logic_error("solve: reconstructed witness misses the merged target");
    }
  }
  const std::int64_t dp_value = saved.back().values[static_cast<std::size_t>(hit)];
  if (has_obj) {
    std::int64_t check = 0;
    for (int i = 0; i < n; ++i)
      check = checked_add(check, checked_mul(cvec[static_cast<std::size_t>(i)],
                                             xm[static_cast<std::size_t>(i)]));
    if (check != dp_value) {
      throw std::logic_error("solve: witness value disagrees with the dp value");
    }
  }

  std::vector<std::int64_t> x = unshift(strace, expand_merged(mtrace, xm));
  Assignment sol{SolutionKind::Ilp, x};
  auto vrep = verify_solution(inst, sol);
  if (!vrep.ok) {
    throw std::logic_error("solve: witness failed final verification: " + vrep.violations.front());
  }
  res.status = SolveStatus::Feasible;
  res.value = has_obj ? checked_add(dp_value, strace.objective_constant) : 0;
  if (has_obj && vrep.objective && *vrep.objective != res.value) {
    throw std::logic_error("solve: witness objective disagrees with the dp value");
  }
  res.witness = std::move(sol);
  return res;
}

SolveResult solve(const BinaryIlpInstance& inst, const SolveOptions& opt) {
  {
    auto rep = validate_instance(inst);
    if (!rep.ok) throw std::invalid_argument("solve: " + rep.violations.front());
  }
  SolveResult res = solve(inst.as_ilp(), opt);
  if (res.witness) res.witness->kind = SolutionKind::Bilp;
  return res;
}

}  // namespace fewrows
