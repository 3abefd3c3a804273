// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_REDUCTIONS_HPP
#define FEWROWS_REDUCTIONS_HPP

#include <cstdint>

#include "fewrows/core.hpp"
#include "fewrows/problems.hpp"
#include "fewrows/trace.hpp"

namespace fewrows {

// Lossless instance rewrites between the problem kinds. Every function
// returns the rewritten instance together with a trace; pull_back maps a
// feasible solution of the rewritten instance to one of the original.
// Rewrites that only decide feasibility reject instances carrying an
// objective rather than dropping it silently.

struct IlpReduction {
  IlpInstance instance;
  ReductionTrace trace;
};

struct CStringReduction {
  ClosestStringInstance instance;
  ReductionTrace trace;
};

struct DiscReduction {
  DiscrepancyInstance instance;
  ReductionTrace trace;
};

struct SetSystemReduction {
  SetSystemInstance instance;
  ReductionTrace trace;
};

struct Pm1Reduction {
  Pm1System instance;
  ReductionTrace trace;
};

// Closest String decision -> ILP feasibility. Requires distance bounds
// (uniform or per-string): one row per string plus one slack column each;
// the center string is the first n binary variables.
IlpReduction cstring_to_ilp(const ClosestStringInstance& inst);

// 0/1-matrix binary program -> inequality system C z <= c with C in {-1,+1}
// over z in {0,1}^{2n}. Every feasible z has coordinate sum n, and its first
// n coordinates solve the source program.
Pm1Reduction to_pm1_system(const BinaryIlpInstance& inst);

// 0/1-matrix binary program -> Closest String with 2m+4 strings of length 6n
// and uniform distance bound 2n. The center string's first n characters solve
// the source program.
CStringReduction ilp_to_cstring(const BinaryIlpInstance& inst);

// Discrepancy decision at target d -> ILP feasibility: two rows per set with
// slack columns; x_i = (1 + chi_i) / 2 over binary x.
IlpReduction disc_to_ilp(const DiscrepancyInstance& inst, std::int64_t d);

// Matrix pair (B, Bbar), each (2k+1) x 2^k over {0,1}, such that exactly two
// sign assignments (z, zbar) in {-1,+1}^{2^k} x {-1,+1}^{2^k} satisfy
// B z + Bbar zbar = 0 rowwise: (1,...,1 | -1,...,-1) and its negation.
struct DiscrepancyGadget {
  int k = 0;
  IntMatrix B;
  IntMatrix Bbar;
};

// Builds the gadget by doubling: seed B = Bbar = (1), then k widening steps,
// each appending two crossing rows. Requires k >= 1.
DiscrepancyGadget build_equality_gadget(int k);

// 0/1-matrix binary program -> discrepancy-0 decision over n + 2^{k+1}
// elements with k = ceil(log2(max(n,2))): the source rows are padded with
// gadget-pinned sign blocks so that set sums vanish exactly at solutions.
DiscReduction ilp_to_disc(const BinaryIlpInstance& inst);

// Multi-cover decision at cardinality d -> ILP feasibility with m+1 rows:
// one cardinality row with a slack and one coverage row with a surplus per
// element; the selection indicator is the first n binary variables.
IlpReduction cover_to_ilp(const SetSystemInstance& inst, std::int64_t d);

// 0/1-matrix binary program with b >= 0 -> uniform Set Multi-Cover over 4n
// sets and 2m+2 elements, demand 2n, cardinality threshold 3n. Feasible
// selections restrict to the first n sets as the source solution.
SetSystemReduction ilp_to_cover(const BinaryIlpInstance& inst);

// Complements every set, swaps cover <-> packing, and replaces the threshold
// b by n - b (cardinality d by n - d). An involution. Requires b <= n. Only
// the cover -> packing solution direction is sound; see the bench suite for
// an instance where the packing optimum exceeds n minus the cover optimum.
SetSystemReduction dualize(const SetSystemInstance& inst);

// Maps a feasible solution of a rewrite's target instance back to a solution
// of its source instance, dispatching on the trace's rule tag. Performs the
// structural checks that are possible without the instances (kind, length,
// value ranges, sign-block orientation) and throws std::invalid_argument on
// violation; full target feasibility is the caller's contract.
Assignment pull_back(const ReductionTrace& trace, const Assignment& sol);

}  // namespace fewrows

#endif  // FEWROWS_REDUCTIONS_HPP
