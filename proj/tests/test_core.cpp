// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fewrows/core.hpp"

using namespace fewrows;

namespace {

IlpInstance small_ilp() {
  // 2x + 3y = 12, 0 <= x <= 6, 0 <= y <= 4, maximize x + y.
  IlpInstance inst;
  inst.m = 1;
  inst.n = 2;
  inst.A = IntMatrix(1, 2);
  inst.A.at(0, 0) = 2;
  inst.A.at(0, 1) = 3;
  inst.b = {12};
  inst.lower = {0, 0};
  inst.upper = {6, 4};
  inst.objective = std::vector<std::int64_t>{1, 1};
  return inst;
}

}  // namespace

TEST_CASE("IntMatrix stores row-major and compares by value") {
  IntMatrix a(2, 3);
  a.at(0, 0) = 1;
  a.at(1, 2) = -4;
  CHECK(a.a == std::vector<std::int64_t>{1, 0, 0, 0, 0, -4});
  CHECK(a.column(2) == std::vector<std::int64_t>{0, -4});
  IntMatrix b = a;
  CHECK(a == b);
  b.at(0, 1) = 9;
  CHECK_FALSE(a == b);
}

TEST_CASE("max_abs_entry") {
  CHECK(IlpInstance{}.max_abs_entry() == 0);
  IlpInstance inst = small_ilp();
  CHECK(inst.max_abs_entry() == 3);
  inst.A.at(0, 0) = -7;
  CHECK(inst.max_abs_entry() == 7);
}

TEST_CASE("validate_instance accepts a well-formed instance") {
  CHECK(validate_instance(small_ilp()).ok);
}

TEST_CASE("validate_instance reports shape problems") {
  IlpInstance inst = small_ilp();
  inst.b.push_back(0);
  auto rep = validate_instance(inst);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.violations.front() == "right-hand side length differs from m");
}

TEST_CASE("validate_instance reports bound inversion with 1-indexed column") {
  IlpInstance inst = small_ilp();
  inst.lower[1] = 5;
  auto rep = validate_instance(inst);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.violations.front() == "bound inversion at column 2");
}

TEST_CASE("validate_instance enforces the magnitude cap strictly") {
  IlpInstance inst = small_ilp();
  inst.A.at(0, 0) = kMagnitudeCap;  // 2^62 itself is already out
  CHECK_FALSE(validate_instance(inst).ok);
  inst.A.at(0, 0) = kMagnitudeCap - 1;
  CHECK(validate_instance(inst).ok);
}

TEST_CASE("binary instance validation checks the 0/1-matrix flag") {
  BinaryIlpInstance inst;
  inst.m = 1;
  inst.n = 2;
  inst.A = IntMatrix(1, 2);
  inst.A.at(0, 0) = 1;
  inst.A.at(0, 1) = 2;
  inst.b = {1};
  CHECK(validate_instance(inst).ok);
  inst.zero_one_matrix = true;
  auto rep = validate_instance(inst);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.violations.front() ==
        "matrix flagged 0/1 but entry at row 1 column 2 is 2");
}

TEST_CASE("as_ilp sets binary bounds") {
  BinaryIlpInstance inst;
  inst.m = 1;
  inst.n = 3;
  inst.A = IntMatrix(1, 3);
  inst.b = {0};
  IlpInstance ilp = inst.as_ilp();
  CHECK(ilp.lower == std::vector<std::int64_t>{0, 0, 0});
  CHECK(ilp.upper == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("verify_solution accepts a feasible point and evaluates the objective") {
  IlpInstance inst = small_ilp();
  Assignment sol{SolutionKind::Ilp, {3, 2}};
  auto rep = verify_solution(inst, sol);
  CHECK(rep.ok);
  REQUIRE(rep.objective.has_value());
  CHECK(*rep.objective == 5);
}

TEST_CASE("verify_solution reports every violation") {
  IlpInstance inst = small_ilp();
  Assignment sol{SolutionKind::Ilp, {7, -1}};
  auto rep = verify_solution(inst, sol);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.violations.size() == 3);  // two bounds plus the row
  CHECK(rep.violations[0] == "bound violated at column 1");
  CHECK(rep.violations[1] == "bound violated at column 2");
  CHECK(rep.violations[2] == "row 1 evaluates to 11, expected 12");
}

TEST_CASE("verify_solution rejects a kind mismatch") {
  IlpInstance inst = small_ilp();
  Assignment sol{SolutionKind::Disc, {3, 2}};
  CHECK_THROWS_AS(verify_solution(inst, sol), std::invalid_argument);
}

TEST_CASE("solution kind tags round-trip") {
  for (SolutionKind k : {SolutionKind::Ilp, SolutionKind::Bilp, SolutionKind::CString,
                         SolutionKind::Disc, SolutionKind::SetSys, SolutionKind::NFold,
                         SolutionKind::Pm1}) {
    auto back = solution_kind_from_tag(solution_kind_tag(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK_FALSE(solution_kind_from_tag("nonsense").has_value());
}

TEST_CASE("shift_to_zero_lower rewrites bounds and right-hand side") {
  IlpInstance inst;
  inst.m = 1;
  inst.n = 2;
  inst.A = IntMatrix(1, 2);
  inst.A.at(0, 0) = 2;
  inst.A.at(0, 1) = 3;
  inst.b = {7};
  inst.lower = {-1, 0};
  inst.upper = {2, 3};
  inst.objective = std::vector<std::int64_t>{1, -1};

  auto [shifted, trace] = shift_to_zero_lower(inst);
  CHECK(shifted.lower == std::vector<std::int64_t>{0, 0});
  CHECK(shifted.upper == std::vector<std::int64_t>{3, 3});
  CHECK(shifted.b == std::vector<std::int64_t>{9});  // 7 - (2*-1 + 3*0)
  CHECK(trace.shift == std::vector<std::int64_t>{-1, 0});
  CHECK(trace.objective_constant == -1);

  // Any shifted-feasible point maps back to a feasible point of the original.
  std::vector<std::int64_t> back = unshift(trace, {3, 1});
  CHECK(back == std::vector<std::int64_t>{2, 1});
  CHECK(verify_solution(inst, Assignment{SolutionKind::Ilp, back}).ok);
}

TEST_CASE("merge_identical_columns groups by column and objective entry") {
  IlpInstance inst;
  inst.m = 1;
  inst.n = 3;
  inst.A = IntMatrix(1, 3);
  inst.A.at(0, 0) = 1;
  inst.A.at(0, 1) = 1;
  inst.A.at(0, 2) = 2;
  inst.b = {4};
  inst.lower = {0, 0, 0};
  inst.upper = {2, 3, 1};

  auto [merged, trace] = merge_identical_columns(inst);
  CHECK(merged.n == 2);
  CHECK(merged.upper == std::vector<std::int64_t>{5, 1});
  REQUIRE(trace.groups.size() == 2);
  CHECK(trace.groups[0].members == std::vector<int>{0, 1});
  CHECK(trace.groups[0].member_upper == std::vector<std::int64_t>{2, 3});
  CHECK(trace.groups[1].members == std::vector<int>{2});

  // Distinct objective entries keep otherwise identical columns apart.
  inst.objective = std::vector<std::int64_t>{1, 2, 0};
  auto [merged2, trace2] = merge_identical_columns(inst);
  CHECK(merged2.n == 3);
  CHECK(trace2.groups.size() == 3);
}

TEST_CASE("expand_merged splits greedily in member order") {
  IlpInstance inst;
  inst.m = 1;
  inst.n = 3;
  inst.A = IntMatrix(1, 3);
  inst.A.at(0, 0) = 1;
  inst.A.at(0, 1) = 1;
  inst.A.at(0, 2) = 1;
  inst.b = {4};
  inst.lower = {0, 0, 0};
  inst.upper = {2, 3, 1};
  auto [merged, trace] = merge_identical_columns(inst);
  REQUIRE(merged.n == 1);
  CHECK(expand_merged(trace, {4}) == std::vector<std::int64_t>{2, 2, 0});
  CHECK(expand_merged(trace, {6}) == std::vector<std::int64_t>{2, 3, 1});
  CHECK_THROWS_AS(expand_merged(trace, {7}), std::invalid_argument);
}

TEST_CASE("merge_identical_columns requires zero lower bounds") {
  IlpInstance inst = small_ilp();
  inst.lower[0] = 1;
  CHECK_THROWS_AS(merge_identical_columns(inst), std::invalid_argument);
}
