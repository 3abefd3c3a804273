// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fewrows/checked.hpp"
#include "fewrows/core.hpp"
#include "fewrows/oracle.hpp"
#include "fewrows/transforms.hpp"

using namespace fewrows;

namespace {

IlpInstance make_ilp(int m, int n, std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                     std::vector<std::int64_t> lo, std::vector<std::int64_t> hi) {
  IlpInstance inst;
  inst.m = m;
  inst.n = n;
  inst.A = IntMatrix(m, n);
  inst.A.a = std::move(a);
  inst.b = std::move(b);
  inst.lower = std::move(lo);
  inst.upper = std::move(hi);
  return inst;
}

BinaryIlpInstance make_bilp(int m, int n, std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  BinaryIlpInstance inst;
  inst.m = m;
  inst.n = n;
  inst.A = IntMatrix(m, n);
  inst.A.a = std::move(a);
  inst.b = std::move(b);
  inst.zero_one_matrix = true;
  for (std::int64_t v : inst.A.a) {
    if (v != 0 && v != 1) inst.zero_one_matrix = false;
  }
  return inst;
}

// Checks the telescoping identity that makes the 0/1 rewrite lossless: for
// every source row, the +-2^i combination of its four rows per level must
// reproduce the source row on the original columns, cancel every auxiliary
// column, and reproduce the right-hand side.
void check_telescope(const IlpInstance& source, const IlpInstance& target) {
  const std::int64_t delta = source.max_abs_entry();
  const int k = ceil_log2(delta);
  const int rows_per = 4 * (k + 1);
  REQUIRE(target.m == source.m * rows_per);
  for (int j = 0; j < source.m; ++j) {
    for (int t = 0; t < target.n; ++t) {
      std::int64_t sum = 0;
      for (int i = 0; i <= k; ++i) {
        const int base = j * rows_per + 4 * i;
        std::int64_t level = target.A.at(base + 0, t) + target.A.at(base + 1, t) -
                             target.A.at(base + 2, t) - target.A.at(base + 3, t);
        sum += level << i;
      }
      std::int64_t expected = t < source.n ? source.A.at(j, t) : 0;
      CHECK(sum == expected);
    }
    std::int64_t rhs = 0;
    for (int i = 0; i <= k; ++i) {
      const int base = j * rows_per + 4 * i;
      std::int64_t level = target.b[base + 0] + target.b[base + 1] - target.b[base + 2] -
                           target.b[base + 3];
      rhs += level << i;
    }
    CHECK(rhs == source.b[static_cast<std::size_t>(j)]);
  }
}

ValidationReport verify_ilp(const IlpInstance& inst, const std::vector<std::int64_t>& x) {
  Assignment sol;
  sol.kind = SolutionKind::Ilp;
  sol.values = x;
  return verify_solution(inst, sol);
}

}  // namespace

TEST_CASE("zero_one_matrix rewrites a single coefficient 3") {
  IlpInstance src = make_ilp(1, 1, {3}, {3}, {0}, {1});
  ZeroOneResult res = zero_one_matrix(src);
  const IlpInstance& tgt = res.instance;

  // Largest entry 3 -> k = 2 -> 12 rows, 1 + (5*2+4) = 15 columns.
  CHECK(tgt.m == 12);
  CHECK(tgt.n == 15);
  CHECK(tgt.max_abs_entry() == 1);
  CHECK(validate_instance(tgt).ok);
  CHECK(res.trace.rule == "zero-one");
  CHECK(res.trace.scalar("m") == 1);
  CHECK(res.trace.scalar("n") == 1);
  CHECK(res.trace.scalar("k") == 2);
  CHECK(res.trace.scalar("m-target") == 12);
  CHECK(res.trace.scalar("n-target") == 15);

  // Original column keeps its bounds; 3 = bits 0 and 1, so x appears in the
  // positive rows of levels 0 and 1 and nowhere else.
  CHECK(tgt.lower[0] == 0);
  CHECK(tgt.upper[0] == 1);
  CHECK(tgt.A.at(0, 0) == 1);   // level 0 positive row
  CHECK(tgt.A.at(4, 0) == 1);   // level 1 positive row
  CHECK(tgt.A.at(8, 0) == 0);   // level 2 positive row (bit 2 clear)
  CHECK(tgt.A.at(2, 0) == 0);   // never in a negative row
  CHECK(tgt.b[0] == 3);         // rhs lands on the level-0 positive row
  for (int r = 1; r < tgt.m; ++r) CHECK(tgt.b[r] == 0);

  check_telescope(src, tgt);

  std::vector<std::int64_t> full = zero_one_complete(src, {1});
  CHECK(static_cast<int>(full.size()) == tgt.n);
  CHECK(full[0] == 1);
  CHECK(verify_ilp(tgt, full).ok);
}

TEST_CASE("zero_one_matrix splits a negative coefficient across negative rows") {
  IlpInstance src = make_ilp(1, 1, {-2}, {-2}, {0}, {3});
  ZeroOneResult res = zero_one_matrix(src);
  const IlpInstance& tgt = res.instance;

  // |-2| has only bit 1 set, so x shows up in the level-1 negative row only.
  const int k = 1;
  CHECK(tgt.m == 4 * (k + 1));
  CHECK(tgt.A.at(0, 0) == 0);
  CHECK(tgt.A.at(2, 0) == 0);       // level 0 negative row: bit clear
  CHECK(tgt.A.at(4 + 0, 0) == 0);   // level 1 positive row
  CHECK(tgt.A.at(4 + 2, 0) == 1);   // level 1 negative row
  check_telescope(src, tgt);

  std::vector<std::int64_t> full = zero_one_complete(src, {1});
  CHECK(verify_ilp(tgt, full).ok);
}

TEST_CASE("zero_one_matrix keeps the objective on the original columns") {
  IlpInstance src = make_ilp(1, 2, {3, 2}, {4}, {0, 0}, {2, 2});
  src.objective = std::vector<std::int64_t>{5, -1};
  ZeroOneResult res = zero_one_matrix(src);
  const IlpInstance& tgt = res.instance;
  REQUIRE(tgt.objective.has_value());
  CHECK((*tgt.objective)[0] == 5);
  CHECK((*tgt.objective)[1] == -1);
  for (int t = 2; t < tgt.n; ++t) CHECK((*tgt.objective)[t] == 0);
  check_telescope(src, tgt);
}

TEST_CASE("zero_one_matrix rejects matrices that are already small") {
  IlpInstance src = make_ilp(1, 1, {1}, {1}, {0}, {1});
  CHECK_THROWS_AS(zero_one_matrix(src), std::invalid_argument);
}

TEST_CASE("zero_one_complete witnesses every feasible source point") {
  // A few shapes with entries beyond +-1, small boxes, exhaustible sources.
  std::vector<IlpInstance> sources;
  sources.push_back(make_ilp(1, 2, {3, -2}, {1}, {0, 0}, {3, 3}));
  sources.push_back(make_ilp(2, 2, {2, 1, -1, 4}, {4, 7}, {-1, -1}, {3, 3}));
  sources.push_back(make_ilp(1, 3, {5, -3, 2}, {0}, {-2, 0, -2}, {2, 2, 2}));
  sources.push_back(make_ilp(2, 3, {7, 1, -2, 0, 3, 3}, {3, 6}, {0, 0, 0}, {2, 2, 2}));

  for (const IlpInstance& src : sources) {
    CAPTURE(src.m);
    CAPTURE(src.n);
    ZeroOneResult res = zero_one_matrix(src);
    check_telescope(src, res.instance);
    int feasible = 0;
    for_each_feasible(src, [&](const Assignment& sol) {
      std::vector<std::int64_t> full = zero_one_complete(src, sol.values);
      ValidationReport rep = verify_ilp(res.instance, full);
      CHECK(rep.ok);
      for (int t = 0; t < src.n; ++t) CHECK(full[t] == sol.values[static_cast<std::size_t>(t)]);
      ++feasible;
      return true;
    });
    CHECK(feasible > 0);
  }
}

TEST_CASE("zero_one_complete rejects infeasible source points") {
  IlpInstance src = make_ilp(1, 1, {3}, {3}, {0}, {1});
  CHECK_THROWS_AS(zero_one_complete(src, {0}), std::invalid_argument);
  CHECK_THROWS_AS(zero_one_complete(src, {0, 0}), std::invalid_argument);
}

TEST_CASE("signed_digits matches the worked examples") {
  CHECK(signed_digits(5, 3) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(signed_digits(-6, 3) == std::vector<std::int64_t>{0, -1, -1});
  CHECK(signed_digits(6, 2) == std::vector<std::int64_t>{2, 2});
  CHECK(signed_digits(0, 0) == std::vector<std::int64_t>{});
  CHECK(signed_digits(0, 4) == std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("signed_digits covers the full representable range and nothing more") {
  for (int w = 0; w <= 10; ++w) {
    const std::int64_t top = (std::int64_t{1} << (w + 1)) - 2;
    for (std::int64_t v = -top; v <= top; ++v) {
      std::vector<std::int64_t> d = signed_digits(v, w);
      REQUIRE(static_cast<int>(d.size()) == w);
      std::int64_t sum = 0;
      for (int i = 0; i < w; ++i) {
        CHECK(std::llabs(d[static_cast<std::size_t>(i)]) <= 2);
        // All digits share the sign of v.
        if (v > 0) CHECK(d[static_cast<std::size_t>(i)] >= 0);
        if (v < 0) CHECK(d[static_cast<std::size_t>(i)] <= 0);
        sum += d[static_cast<std::size_t>(i)] << i;
      }
      CHECK(sum == v);
    }
    CHECK_THROWS_AS(signed_digits(top + 1, w), std::invalid_argument);
    CHECK_THROWS_AS(signed_digits(-top - 1, w), std::invalid_argument);
  }
  CHECK_THROWS_AS(signed_digits(1, -1), std::invalid_argument);
}

TEST_CASE("nfold_block_matrix pins the 3x3 shape") {
  IntMatrix B = nfold_block_matrix(3);
  CHECK(B.a == std::vector<std::int64_t>{1, 0, 1, 0, 0, 0, 2, -1, 0});
  CHECK_THROWS_AS(nfold_block_matrix(2), std::invalid_argument);
}

TEST_CASE("nfold block system has exactly the two intended solutions") {
  for (int m = 3; m <= 5; ++m) {
    CAPTURE(m);
    IntMatrix B = nfold_block_matrix(m);
    const std::int64_t cap = std::int64_t{1} << (m - 2);
    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> x(static_cast<std::size_t>(m), 0);
    // Odometer over [0, cap]^m.
    while (true) {
      bool ok = true;
      for (int r = 0; r < m && ok; ++r) {
        std::int64_t v = 0;
        for (int c = 0; c < m; ++c) v += B.at(r, c) * x[static_cast<std::size_t>(c)];
        ok = v == (r == 0 ? 1 : 0);
      }
      if (ok) found.push_back(x);
      int p = 0;
      while (p < m && x[static_cast<std::size_t>(p)] == cap) x[static_cast<std::size_t>(p++)] = 0;
      if (p == m) break;
      ++x[static_cast<std::size_t>(p)];
    }
    REQUIRE(found.size() == 2);
    std::vector<std::int64_t> geometric(static_cast<std::size_t>(m));
    for (int i = 0; i + 1 < m; ++i) geometric[static_cast<std::size_t>(i)] = std::int64_t{1} << i;
    geometric[static_cast<std::size_t>(m - 1)] = 0;
    std::vector<std::int64_t> unit(static_cast<std::size_t>(m), 0);
    unit[static_cast<std::size_t>(m - 1)] = 1;
    CHECK(((found[0] == unit && found[1] == geometric) ||
           (found[0] == geometric && found[1] == unit)));
  }
}

TEST_CASE("to_nfold encodes a binary program blockwise") {
  BinaryIlpInstance src = make_bilp(2, 2, {1, -2, 3, 1}, {1, 3});
  ToNFoldResult res = to_nfold(src);
  const NFoldInstance& tgt = res.instance;

  CHECK(tgt.m == 3);
  CHECK(tgt.n == 2);
  REQUIRE(tgt.A.size() == 2);
  REQUIRE(tgt.B.size() == 2);
  CHECK(tgt.B[0] == nfold_block_matrix(3));
  CHECK(tgt.B[1] == nfold_block_matrix(3));
  CHECK(tgt.b0 == std::vector<std::int64_t>{1, 3, 0});
  CHECK(tgt.b[0] == std::vector<std::int64_t>{1, 0, 0});
  CHECK(tgt.b[1] == std::vector<std::int64_t>{1, 0, 0});
  // Column 0 of the source has entries 1 and 3: digits (1,0) and (1,1),
  // padded with a zero third column; the third source row does not exist, so
  // the third block row is zero.
  CHECK(tgt.A[0].a == std::vector<std::int64_t>{1, 0, 0, 1, 1, 0, 0, 0, 0});
  CHECK(tgt.A[1].a == std::vector<std::int64_t>{0, -1, 0, 1, 0, 0, 0, 0, 0});
  CHECK(res.trace.rule == "to-nfold");
  CHECK(res.trace.scalar("m") == 3);
  CHECK(res.trace.scalar("n") == 2);
  CHECK(res.trace.scalar("source-m") == 2);
}

TEST_CASE("to_nfold preserves feasibility against the oracle") {
  std::vector<BinaryIlpInstance> sources;
  sources.push_back(make_bilp(2, 2, {1, -2, 3, 1}, {1, 3}));   // feasible: x = (0,?) no; oracle decides
  sources.push_back(make_bilp(1, 3, {2, 3, -1}, {5}));
  sources.push_back(make_bilp(2, 3, {1, 1, 1, 2, -2, 0}, {2, 0}));
  sources.push_back(make_bilp(1, 2, {4, 2}, {7}));             // infeasible: even sums only
  sources.push_back(make_bilp(2, 2, {1, 0, 0, 1}, {1, 1}));

  for (const BinaryIlpInstance& src : sources) {
    CAPTURE(src.m);
    CAPTURE(src.n);
    ToNFoldResult res = to_nfold(src);
    OracleResult src_res = oracle_solve(src);
    OracleResult tgt_res = oracle_solve(res.instance);
    CHECK(src_res.feasible == tgt_res.feasible);
    if (tgt_res.feasible) {
      // Block i is the geometric pattern exactly when x_i = 1; the projected
      // vector must be feasible for the source.
      REQUIRE(tgt_res.witness.has_value());
      const std::vector<std::int64_t>& flat = tgt_res.witness->values;
      REQUIRE(static_cast<int>(flat.size()) == res.instance.m * res.instance.n);
      Assignment projected;
      projected.kind = SolutionKind::Bilp;
      for (int i = 0; i < src.n; ++i) projected.values.push_back(flat[static_cast<std::size_t>(i * res.instance.m)]);
      CHECK(verify_solution(src, projected).ok);
    }
  }
}

TEST_CASE("to_nfold enforces the digit range") {
  BinaryIlpInstance src = make_bilp(1, 1, {7}, {7});  // m' = 3, cap 2^3 - 2 = 6
  CHECK_THROWS_AS(to_nfold(src), std::invalid_argument);
  BinaryIlpInstance ok = make_bilp(1, 1, {6}, {6});
  CHECK(to_nfold(ok).instance.m == 3);
}

TEST_CASE("binarize leaves a unit box essentially unchanged") {
  IlpInstance src = make_ilp(1, 2, {1, 1}, {1}, {0, 0}, {1, 1});
  BinarizeResult res = binarize(src, true);
  CHECK(res.instance.m == 1);
  CHECK(res.instance.n == 2);
  CHECK(res.instance.A.a == std::vector<std::int64_t>{1, 1});
  CHECK(res.instance.b == std::vector<std::int64_t>{1});
  CHECK(res.instance.zero_one_matrix);
  CHECK(res.trace.rule == "binarize");
  CHECK(res.trace.scalar("trim") == 0);
  CHECK(res.trace.values("base") == std::vector<std::int64_t>{0, 0});
  CHECK(res.trace.values("count") == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("binarize expands wider boxes in unary") {
  IlpInstance src = make_ilp(1, 1, {1}, {2}, {-1}, {3});
  BinarizeResult res = binarize(src, true);
  // Width 4 -> four duplicate columns, rhs shifted by the lower bound.
  CHECK(res.instance.n == 4);
  CHECK(res.instance.A.a == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(res.instance.b == std::vector<std::int64_t>{3});
  CHECK(res.trace.values("base") == std::vector<std::int64_t>{-1});
  CHECK(res.trace.values("count") == std::vector<std::int64_t>{4});
  OracleResult tgt = oracle_solve(res.instance);
  CHECK(tgt.feasible);
}

TEST_CASE("binarize trims far-apart bounds around a relaxation vertex") {
  IlpInstance src = make_ilp(1, 1, {1}, {5}, {-1000000}, {1000000});
  BinarizeResult res = binarize(src, true);
  CHECK(res.trace.scalar("trim") == 1);
  // Radius (2*1+1)^1 = 3 around the relaxation point 5 -> box [2, 8].
  CHECK(res.trace.values("base") == std::vector<std::int64_t>{2});
  CHECK(res.trace.values("count") == std::vector<std::int64_t>{6});
  CHECK(res.instance.n == 6);
  CHECK(res.instance.b == std::vector<std::int64_t>{3});
  OracleResult tgt = oracle_solve(res.instance);
  CHECK(tgt.feasible);
}

TEST_CASE("binarize emits a canonical infeasible target when the relaxation is empty") {
  IlpInstance src = make_ilp(1, 1, {1}, {100}, {-1000000}, {0});
  BinarizeResult res = binarize(src, true);
  CHECK(res.trace.scalar("relaxation-infeasible") == 1);
  CHECK(res.instance.m == 1);
  CHECK(res.instance.n == 0);
  CHECK(res.instance.b == std::vector<std::int64_t>{1});
  CHECK_FALSE(oracle_solve(res.instance).feasible);
}

TEST_CASE("binarize without proximity keeps the full box") {
  IlpInstance src = make_ilp(1, 1, {1}, {5}, {0}, {9});
  BinarizeResult res = binarize(src, false);
  CHECK(res.trace.scalar("trim") == 0);
  CHECK(res.instance.n == 9);
  CHECK(res.instance.b == std::vector<std::int64_t>{5});
}

TEST_CASE("binarize duplicates the objective and records the constant") {
  IlpInstance src = make_ilp(1, 1, {1}, {1}, {-2}, {2});
  src.objective = std::vector<std::int64_t>{3};
  BinarizeResult res = binarize(src, true);
  REQUIRE(res.instance.objective.has_value());
  CHECK(*res.instance.objective == std::vector<std::int64_t>{3, 3, 3, 3});
  CHECK(res.trace.scalar("objective-constant") == -6);
  // Optimum of the source: x = 1 feasible (only solution), value 3.
  // Target: rhs 1 - (-2) = 3, pick three columns, value 9; 9 + (-6) = 3.
  OracleResult src_res = oracle_solve(src);
  OracleResult tgt_res = oracle_solve(res.instance);
  REQUIRE(src_res.feasible);
  REQUIRE(tgt_res.feasible);
  CHECK(src_res.value == tgt_res.value + res.trace.scalar("objective-constant"));
}

TEST_CASE("binarize respects the column cap") {
  IlpInstance src = make_ilp(1, 1, {1}, {5}, {0}, {1000});
  CHECK_THROWS_AS(binarize(src, false, 100), CapacityError);
}

TEST_CASE("binarize agrees with the oracle on seeded small instances") {
  // Deterministic mini-generator: m <= 2, n <= 3, entries in [-2, 2],
  // bounds in [-3, 3]; compare feasibility and optimal values.
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  int feasible_count = 0;
  for (int iter = 0; iter < 150; ++iter) {
    CAPTURE(iter);
    int m = static_cast<int>(draw(1, 2)), n = static_cast<int>(draw(1, 3));
    IlpInstance src;
    src.m = m;
    src.n = n;
    src.A = IntMatrix(m, n);
    for (auto& v : src.A.a) v = draw(-2, 2);
    for (int i = 0; i < m; ++i) src.b.push_back(draw(-4, 4));
    for (int t = 0; t < n; ++t) {
      std::int64_t a = draw(-3, 3), b = draw(-3, 3);
      src.lower.push_back(std::min(a, b));
      src.upper.push_back(std::max(a, b));
    }
    if (draw(0, 1) == 1) {
      std::vector<std::int64_t> c;
      for (int t = 0; t < n; ++t) c.push_back(draw(-2, 2));
      src.objective = c;
    }

    BinarizeResult res = binarize(src, true);
    OracleResult src_res = oracle_solve(src);
    OracleResult tgt_res = oracle_solve(res.instance);
    CHECK(src_res.feasible == tgt_res.feasible);
    if (src_res.feasible) {
      ++feasible_count;
      if (src.objective) {
        CHECK(src_res.value == tgt_res.value + res.trace.scalar("objective-constant"));
      }
    }
  }
  CHECK(feasible_count > 20);
}
