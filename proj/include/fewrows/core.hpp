// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_CORE_HPP
#define FEWROWS_CORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewrows/checked.hpp"

namespace fewrows {

// Dense row-major integer matrix. Small dimensions throughout the library;
// no sparse cleverness on purpose.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;  // rows*cols entries, row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  std::vector<std::int64_t> column(int c) const {
    std::vector<std::int64_t> col(rows);
    for (int r = 0; r < rows; ++r) col[r] = at(r, c);
    return col;
  }

  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// find x in Z^n with A x = b, lower <= x <= upper, optionally maximizing
// objective^T x. All entries must be below the magnitude cap.
struct IlpInstance {
  int m = 0;  // rows
  int n = 0;  // columns
  IntMatrix A;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::optional<std::vector<std::int64_t>> objective;

  // Largest |A_{ij}|; 0 for an empty matrix.
  std::int64_t max_abs_entry() const;
};

// Same problem with all variables in {0,1}. `zero_one_matrix` records whether
// every matrix entry is 0/1 as well (some reductions require it).
struct BinaryIlpInstance {
  int m = 0;
  int n = 0;
  IntMatrix A;
  std::vector<std::int64_t> b;
  std::optional<std::vector<std::int64_t>> objective;
  bool zero_one_matrix = false;

  IlpInstance as_ilp() const;
};

enum class SolutionKind { Ilp, Bilp, CString, Disc, SetSys, NFold, Pm1 };

const char* solution_kind_tag(SolutionKind k);
std::optional<SolutionKind> solution_kind_from_tag(const std::string& tag);

// A candidate solution for any of the problem kinds. `values` is the flat
// integer encoding: variable vector for ILP kinds, 0/1 characters for a
// string, a +-1 coloring, a 0/1 set-selection indicator, or the concatenated
// n-fold blocks.
struct Assignment {
  SolutionKind kind = SolutionKind::Ilp;
  std::vector<std::int64_t> values;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  // Objective value of a verified-feasible solution, when the instance
  // carries an objective (or a natural one: distance/discrepancy/cardinality).
  std::optional<std::int64_t> objective;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

// Applied lower-bound shift: x = x' + shift with x' >= 0.
struct ShiftTrace {
  std::vector<std::int64_t> shift;
  std::int64_t objective_constant = 0;  // objective^T shift, 0 without objective
};

// Column-merge bookkeeping. Groups partition the original columns; columns in
// one group are identical in A (and objective, when present). `shift` is the
// lower-bound shift already applied before merging (all zeros when merging an
// instance that already has zero lower bounds).
struct MergeTrace {
  struct Group {
    std::vector<int> members;                 // original column indices, ascending
    std::vector<std::int64_t> member_upper;   // their original upper bounds
  };
  std::vector<Group> groups;
  std::vector<std::int64_t> shift;
};

// Structural checks: dimensions, bound order, magnitude cap.
ValidationReport validate_instance(const IlpInstance& inst);
ValidationReport validate_instance(const BinaryIlpInstance& inst);

// Exact feasibility check of `sol` against `inst`; reports every violated
// row/bound. Throws std::invalid_argument on a kind mismatch.
ValidationReport verify_solution(const IlpInstance& inst, const Assignment& sol);
ValidationReport verify_solution(const BinaryIlpInstance& inst, const Assignment& sol);

// Rewrites the instance over x' = x - lower (so lower' = 0) and returns the
// shift needed to undo it.
std::pair<IlpInstance, ShiftTrace> shift_to_zero_lower(const IlpInstance& inst);

// Merges identical columns of a zero-lower-bound instance; merged upper bound
// is the sum of the members' bounds. Column identity includes the objective
// entry when an objective is present.
std::pair<IlpInstance, MergeTrace> merge_identical_columns(const IlpInstance& inst);

// Undo helpers. expand_merged splits a merged variable greedily over its
// group members in index order; unshift adds the recorded shift back.
std::vector<std::int64_t> expand_merged(const MergeTrace& trace, const std::vector<std::int64_t>& merged);
std::vector<std::int64_t> unshift(const ShiftTrace& trace, const std::vector<std::int64_t>& x);

}  // namespace fewrows

#endif  // FEWROWS_CORE_HPP
