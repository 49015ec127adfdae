#pragma once

#include <string>
#include <vector>

#include "fairalloc/solvers.hpp"

namespace fairalloc {

// ---------------------------------------------------------------------------
// NP-hardness gadgets: each generator turns an instance of a classic decision
// problem into a public-goods instance together with an exact objective
// threshold such that
//
//     source is a YES instance  <=>  optimum objective meets the threshold.
//
// Thresholds stay in unrooted integer space (products, not geometric means)
// so the equivalence is decidable exactly.
// ---------------------------------------------------------------------------

enum class GadgetObjective { mnw, leximin, maxmin };

const char* gadget_objective_name(GadgetObjective o);

struct GadgetThreshold {
  enum class Kind {
    positive_count,  // number of positively-served agents >= bound
    nash_product,    // all agents positive and product >= bound
    min_utility,     // minimum utility >= bound
    sorted_lex,      // sorted utility vector >= sorted_bound lexicographically
  };

  Kind kind = Kind::positive_count;
  BigInt bound = 0;                 // scalar kinds
  std::vector<Value> sorted_bound;  // sorted_lex only, non-decreasing
};

const char* threshold_kind_name(GadgetThreshold::Kind kind);

struct GadgetInstance {
  std::string gadget;  // "setcover" / "ersp" / "eqsp" / "msat"
  PublicGoodsInstance instance;
  GadgetObjective objective = GadgetObjective::mnw;
  GadgetThreshold threshold;
  std::string yes_iff;  // human-readable statement of the equivalence
};

// Solves with the exact oracle matching the gadget's objective and evaluates
// the threshold.  True == the source decision problem is a YES instance.
bool gadget_verdict(const GadgetInstance& gadget, const SolveLimits& limits = {});

// ---------------------------------------------------------------------------
// Set Cover -> MNW with k < n.  Universe elements become agents, family sets
// become goods valued 1 by their members.  Covers of size <= k are exactly
// the selections serving every agent, so the threshold is positive_count = n.
// Every element must appear in some set (an uncovered element would be an
// agent valuing no good, outside the model).
// ---------------------------------------------------------------------------
GadgetInstance from_set_cover(int universe_size, const std::vector<std::vector<int>>& family,
                              int k);

// ---------------------------------------------------------------------------
// Exact Regular Set Packing -> MNW with k = packing_size + element_count.
// Element agents value the goods for family sets containing them at 1, and n
// dummy goods are valued 1 by every agent.  Every optimum keeps all n
// dummies (swapping a set good for a missing dummy never hurts anyone and
// helps the uncovered), so each agent starts at utility n and selecting r
// disjoint size-d sets lifts d*r distinct agents to n+1.  By the
// fixed-sum/floor bound below, the product reaches
// (n+1)^(d r) * n^(n - d r) exactly when an exact packing of size r exists;
// any overlap concentrates units and falls strictly short.  Family sets must
// all have size d (regularity).
// ---------------------------------------------------------------------------
GadgetInstance from_ersp(int element_count, const std::vector<std::vector<int>>& family,
                         int set_size, int packing_size);

// ---------------------------------------------------------------------------
// Equal Sum Partition -> MNW (or max-min) with two agents.  For values a_j
// with R = sum a_j, agent 1 values good j at a_j + R and agent 2 at
// C + R - a_j where C = 2R/m, so every size-(m/2) selection gives total
// utilities summing to a constant and the product (or the minimum) peaks
// exactly on equal-sum halves: MNW threshold ((R + R m)/2)^2, max-min
// threshold (R + R m)/2.  Requires an even value sum; the input is
// zero-padded until m is even and m divides 2R (eqsp_pad).
// ---------------------------------------------------------------------------
std::vector<Value> eqsp_pad(std::vector<Value> values);
GadgetInstance from_eqsp(const std::vector<Value>& values,
                         GadgetObjective objective = GadgetObjective::mnw);

// ---------------------------------------------------------------------------
// c-Monotone SAT (is there a satisfying assignment with at most c variables
// true, all clauses positive) -> leximin.  Clause agents value their
// variables' goods at 1 plus every dummy good at 1; one dummy agent values
// only the m - c + 1 dummy goods.  Under k = (m - c + 1) + c the sorted
// optimum reaches (m-c+1, m-c+2, ..., m-c+2) iff some <=c-true assignment
// satisfies every clause (m = clause count).
// ---------------------------------------------------------------------------
GadgetInstance from_monotone_sat(int variable_count, const std::vector<std::vector<int>>& clauses,
                                 int true_budget);

// ---------------------------------------------------------------------------
// Sharpest product with a fixed sum and a floor: over integer vectors
// u_1..u_n with u_i >= lower and sum = n*lower + remainder, the maximum of
// prod u_i is (lower+1)^remainder * lower^(n-remainder) — spread the
// remainder one unit per coordinate.  Used to calibrate the packing gadget's
// threshold.  Requires n >= 1, lower >= 1, 0 <= remainder <= n.
// ---------------------------------------------------------------------------
BigInt max_product_bounded_sum(int n, Value lower, Value remainder);

}  // namespace fairalloc
