#pragma once

#include <variant>
#include <vector>

#include "fairalloc/arith.hpp"

namespace fairalloc {

// ---------------------------------------------------------------------------
// Models.  Three settings share the additive-valuation machinery:
//
//   public goods    — pick one set of goods everyone consumes, limited by a
//                     cardinality bound k or a knapsack budget B over costs;
//   private goods   — partition the goods among the agents;
//   public decisions — per issue, pick exactly one alternative for everyone.
//
// Indices are 0-based throughout the library; the JSON wire format is 1-based.
// ---------------------------------------------------------------------------

struct Cardinality {
  int k = 0;  // select at most k goods
};

struct Budget {
  Value limit = 0;            // B >= 0
  std::vector<Value> costs;   // one positive cost per good
};

using Constraint = std::variant<Cardinality, Budget>;

// Generators for hardness gadgets are allowed to build degenerate instances
// (e.g. a zero-good family); the wire format and solver entry points insist on
// the full model invariants.
enum class Strictness { strict, relaxed };

struct PublicGoodsInstance {
  int agent_count = 0;
  int good_count = 0;
  Constraint constraint = Cardinality{0};
  // Agent-major, agent_count x good_count, non-negative entries; every agent
  // values at least one good.
  std::vector<std::vector<Value>> valuations;

  Value value(int agent, int good) const { return valuations[agent][good]; }
  Value max_value() const;  // V = max over all entries

  bool is_cardinality() const { return std::holds_alternative<Cardinality>(constraint); }
  int cardinality_k() const;       // throws UnsupportedError on budget instances
  const Budget* budget() const;    // nullptr on cardinality instances
  // Uniform view used by the knapsack-style solvers: cardinality k becomes
  // budget k with unit costs.  The two views admit exactly the same
  // selections, so solver outputs are identical either way.
  Budget as_budget() const;

  void validate(Strictness strictness = Strictness::strict) const;
};

struct PrivateGoodsInstance {
  int agent_count = 0;
  int good_count = 0;
  std::vector<std::vector<Value>> valuations;  // same invariants as above

  Value value(int agent, int good) const { return valuations[agent][good]; }
  Value max_value() const;
  void validate(Strictness strictness = Strictness::strict) const;
};

struct DecisionIssue {
  int alternatives = 2;                    // >= 2
  // Agent-major, agent_count x alternatives, non-negative entries.
  std::vector<std::vector<Value>> values;
};

struct PublicDecisionsInstance {
  int agent_count = 0;
  std::vector<DecisionIssue> issues;

  int issue_count() const { return static_cast<int>(issues.size()); }
  Value value(int agent, int issue, int alternative) const {
    return issues[issue].values[agent][alternative];
  }
  BigInt outcome_count() const;  // product of the per-issue alternative counts
  void validate() const;
};

// ---------------------------------------------------------------------------
// Allocations.
// ---------------------------------------------------------------------------

struct PublicSelection {
  std::vector<int> goods;  // strictly increasing, 0-based

  friend bool operator==(const PublicSelection&, const PublicSelection&) = default;
};

struct PrivatePartition {
  // One bundle per agent; bundles are strictly increasing and together cover
  // every good exactly once.
  std::vector<std::vector<int>> bundles;

  friend bool operator==(const PrivatePartition&, const PrivatePartition&) = default;
};

struct DecisionVector {
  std::vector<int> decisions;  // one 0-based alternative per issue

  friend bool operator==(const DecisionVector&, const DecisionVector&) = default;
};

using Allocation = std::variant<PublicSelection, PrivatePartition, DecisionVector>;

Value selection_cost(const PublicGoodsInstance& inst, const PublicSelection& x);

bool is_feasible(const PublicGoodsInstance& inst, const PublicSelection& x);
bool is_feasible(const PrivateGoodsInstance& inst, const PrivatePartition& x);
bool is_feasible(const PublicDecisionsInstance& inst, const DecisionVector& x);

// Throw ValidationError with a description of the first violation.
void require_feasible(const PublicGoodsInstance& inst, const PublicSelection& x);
void require_feasible(const PrivateGoodsInstance& inst, const PrivatePartition& x);
void require_feasible(const PublicDecisionsInstance& inst, const DecisionVector& x);

}  // namespace fairalloc
