#pragma once

#include <optional>
#include <vector>

#include "fairalloc/enumerate.hpp"
#include "fairalloc/objective.hpp"

namespace fairalloc {

// ---------------------------------------------------------------------------
// Share definitions (cardinality instances only; the constraint k is what the
// shares are measured against, so budget instances are rejected):
//
//   Prop_i = v_i(top-k goods) / n   — the agent's proportional share;
//   RRS_i  = v_i(top-floor(k/n))    — the round-robin share, what agent i can
//                                     guarantee itself picking last in a
//                                     round-robin; 0 when k < n.
// ---------------------------------------------------------------------------
Rational prop_share(const PublicGoodsInstance& inst, int agent);
Value rrs_share(const PublicGoodsInstance& inst, int agent);

// v_i(x) >= alpha * Prop_i for every agent i.
bool check_alpha_prop(const PublicGoodsInstance& inst, const PublicSelection& x,
                      const Rational& alpha);

// v_i(x) >= alpha * RRS_i for every agent i.
bool check_alpha_rrs(const PublicGoodsInstance& inst, const PublicSelection& x,
                     const Rational& alpha);

// One exchange that brings an agent up to its alpha-proportional share: swap
// a selected good for an unselected one, or (when |x| < k) just add one.
struct SwapWitness {
  std::optional<int> removed;  // empty when a plain addition suffices
  int added = -1;
};

struct Prop1Check {
  bool satisfied = false;
  // Present only when the agent needed an exchange (not when v_i(x) already
  // meets the share).  Tests re-apply the witness and re-check the utility.
  std::optional<SwapWitness> witness;
};

// alpha-Prop1: for every agent, some single exchange (or none) reaches
// alpha * Prop_i.  For additive valuations the best exchange is the cheapest
// removal (minimum selected value) paired with the best addition (maximum
// unselected value), so the check is exact and cheap.
Prop1Check check_prop1_agent(const PublicGoodsInstance& inst, const PublicSelection& x, int agent,
                             const Rational& alpha);

struct Prop1Report {
  bool all_satisfied = false;
  std::vector<Prop1Check> agents;
};

Prop1Report check_prop1(const PublicGoodsInstance& inst, const PublicSelection& x,
                        const Rational& alpha);

// Brute-force Pareto check over the full feasible space (the caller accepts
// the exponential cost).  When x is dominated, `dominator` is the first
// dominating selection in enumeration order.
struct ParetoCheck {
  bool optimal = false;
  std::optional<PublicSelection> dominator;
};

ParetoCheck check_pareto_optimal(const PublicGoodsInstance& inst, const PublicSelection& x);

// ---------------------------------------------------------------------------
// Combined audit: per-agent shares, achieved approximation ratios, Prop1 with
// witnesses, and global Pareto optimality.  `alpha` is the Prop1 threshold.
// ---------------------------------------------------------------------------
struct AgentFairness {
  Rational prop_share = 0;
  Value rrs_share = 0;
  // v_i(x) / share, exact; empty when the share is 0 (ratio undefined).
  std::optional<Rational> alpha_prop;
  std::optional<Rational> alpha_rrs;
  bool prop1_satisfied = false;
  std::optional<SwapWitness> prop1_witness;
};

struct FairnessReport {
  Rational alpha = 1;
  std::vector<AgentFairness> agents;
  bool pareto_optimal = false;
  std::optional<PublicSelection> pareto_dominator;
};

FairnessReport audit(const PublicGoodsInstance& inst, const PublicSelection& x,
                     const Rational& alpha = Rational(1));

}  // namespace fairalloc
