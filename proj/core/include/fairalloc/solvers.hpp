#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fairalloc/enumerate.hpp"
#include "fairalloc/objective.hpp"

namespace fairalloc {

enum class Objective { mnw, leximin };

const char* objective_name(Objective o);          // "mnw" / "leximin"
Objective objective_from_name(const std::string& name);

struct SolveResult {
  Allocation allocation;
  Objective objective = Objective::mnw;
  // Always recomputed from the final allocation, never carried through solver
  // internals, so the reported objective value matches the allocation exactly.
  NashScore score;  // meaningful when objective == mnw
  UtilityVector utilities;
  std::string method;
  // Position of the allocation in the model's deterministic enumeration
  // order: the characteristic-vector counter for selections, the
  // assignment/decision odometer position otherwise.
  BigInt tie_break_rank = 0;
};

// ---------------------------------------------------------------------------
// Exact oracles.  Each enumerates the full feasible space in the model's
// deterministic order and returns the first optimum encountered, so ties
// break toward the lexicographically-first allocation.  Each refuses with a
// ScaleRefusal (carrying the exact state count) when the space exceeds
// limits.max_states.
// ---------------------------------------------------------------------------
SolveResult brute_force_mnw(const PublicGoodsInstance& inst, const SolveLimits& limits = {});
SolveResult brute_force_leximin(const PublicGoodsInstance& inst, const SolveLimits& limits = {});
SolveResult brute_force_decisions(const PublicDecisionsInstance& inst, Objective objective,
                                  const SolveLimits& limits = {});
SolveResult brute_force_private(const PrivateGoodsInstance& inst, Objective objective,
                                const SolveLimits& limits = {});

// ---------------------------------------------------------------------------
// Agent-type grouping: agents with identical valuation rows are one type.
// Types are numbered by first appearance in agent order.
// ---------------------------------------------------------------------------
struct AgentTypes {
  std::vector<int> type_of_agent;   // agent -> type
  std::vector<int> weight;          // type  -> number of agents
  std::vector<int> representative;  // type  -> lowest agent index
};
AgentTypes group_agent_types(const PublicGoodsInstance& inst);

// Good-type grouping: goods with identical value columns and equal cost are
// one type, numbered by first appearance in good order.
struct GoodTypes {
  std::vector<int> type_of_good;          // good -> type
  std::vector<std::vector<int>> members;  // type -> good indices, increasing
};
GoodTypes group_good_types(const PublicGoodsInstance& inst);

// ---------------------------------------------------------------------------
// Knapsack-style dynamic program over per-type utility vectors, polynomial
// for a constant number of agent types.  The table maps each reachable
// utility vector (one coordinate per agent type) to a cheapest selection
// achieving it.  Cells carry their witness selections outright: a cheaper
// path may displace a cell after other cells were extended from it, so
// predecessor links would dangle, while a per-cell witness stays valid.
// ---------------------------------------------------------------------------
struct DpCell {
  Value cost = 0;
  std::vector<int> goods;  // witness selection, strictly increasing
};

struct DpTable {
  AgentTypes types;
  std::map<std::vector<Value>, DpCell> cells;  // per-type utility vector -> cell
};

// Builds the full reachable-state table under the instance's budget view.
// Refuses when the dense bound (mV+1)^t * (m+1) exceeds limits.max_states.
DpTable build_agent_type_table(const PublicGoodsInstance& inst, const SolveLimits& limits = {});

// Returns the witness selection recorded for the given state (strictly
// increasing good indices).
std::vector<int> reconstruct_selection(const DpTable& table, const std::vector<Value>& key);

// Exact solver via the table above.  Ties break toward the first optimal
// state in the table's key order (which may differ from the brute-force
// tie-break; objective values always agree).
SolveResult dp_const_agent_types(const PublicGoodsInstance& inst, Objective objective,
                                 const SolveLimits& limits = {});

// ---------------------------------------------------------------------------
// Exact solver for a constant number of good types: enumerate how many goods
// of each type to take (an odometer over count vectors), polynomial for
// constant t.  Refuses when the count-vector space exceeds limits.max_states.
// ---------------------------------------------------------------------------
SolveResult enum_const_good_types(const PublicGoodsInstance& inst, Objective objective,
                                  const SolveLimits& limits = {});

// ---------------------------------------------------------------------------
// Greedy approximation for cardinality instances with k >= n.  Each agent
// contributes its best bundle of size floor(k/n) (computed by `maximize`);
// the union is padded up to k goods by total-value, lowest-index-first picks.
// With the exact additive maximizer every agent keeps its full round-robin
// share, which bounds the Nash product within a factor (2n-1)^n of optimal
// and gives each agent at least a 1/(2n-1) fraction of its proportional
// share (asserted by the acceptance suite).
// ---------------------------------------------------------------------------
using MaximizeFn =
    std::function<std::vector<int>(const PublicGoodsInstance& inst, int agent, int size_cap)>;

// Exact top-size_cap set for additive valuations: sort by value descending,
// index ascending, take the first size_cap goods.
std::vector<int> additive_maximize(const PublicGoodsInstance& inst, int agent, int size_cap);

SolveResult alg_greedy(const PublicGoodsInstance& inst, const MaximizeFn& maximize = additive_maximize);

}  // namespace fairalloc
