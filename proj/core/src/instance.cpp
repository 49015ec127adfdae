#include "fairalloc/instance.hpp"

#include <algorithm>
#include <string>

#include "fairalloc/errors.hpp"

namespace fairalloc {

namespace {

void check_valuation_table(const std::vector<std::vector<Value>>& valuations, int n, int m,
                           Strictness strictness) {
  if (static_cast<int>(valuations.size()) != n) {
    throw ValidationError("valuations: expected " + std::to_string(n) + " rows, got " +
                          std::to_string(valuations.size()));
  }
  for (int i = 0; i < n; ++i) {
    const auto& row = valuations[i];
    if (static_cast<int>(row.size()) != m) {
      throw ValidationError("valuations[" + std::to_string(i) + "]: expected " +
                            std::to_string(m) + " entries, got " + std::to_string(row.size()));
    }
    bool any_positive = false;
    for (int j = 0; j < m; ++j) {
      if (row[j] < 0) {
        throw ValidationError("valuations[" + std::to_string(i) + "][" + std::to_string(j) +
                              "]: negative value");
      }
      any_positive = any_positive || row[j] > 0;
    }
    if (!any_positive && strictness == Strictness::strict) {
      throw ValidationError("valuations[" + std::to_string(i) + "]: agent " +
                            std::to_string(i + 1) + " values no good");
    }
  }
}

Value max_entry(const std::vector<std::vector<Value>>& valuations) {
  Value v = 0;
  for (const auto& row : valuations) {
    for (Value e : row) v = std::max(v, e);
  }
  return v;
}

}  // namespace

Value PublicGoodsInstance::max_value() const { return max_entry(valuations); }

int PublicGoodsInstance::cardinality_k() const {
  if (const auto* c = std::get_if<Cardinality>(&constraint)) return c->k;
  throw UnsupportedError("operation requires a cardinality constraint, instance has a budget");
}

const Budget* PublicGoodsInstance::budget() const { return std::get_if<Budget>(&constraint); }

Budget PublicGoodsInstance::as_budget() const {
  if (const auto* b = budget()) return *b;
  Budget unit;
  unit.limit = cardinality_k();
  unit.costs.assign(good_count, 1);
  return unit;
}

void PublicGoodsInstance::validate(Strictness strictness) const {
  if (agent_count < 1) throw ValidationError("n: need at least one agent");
  if (good_count < 0) throw ValidationError("m: negative good count");
  if (good_count < 1 && strictness == Strictness::strict) {
    throw ValidationError("m: need at least one good");
  }
  if (const auto* c = std::get_if<Cardinality>(&constraint)) {
    if (c->k < 0) throw ValidationError("constraint.k: negative");
    if (c->k > good_count) throw ValidationError("constraint.k: exceeds good count");
  } else {
    const auto& b = std::get<Budget>(constraint);
    if (b.limit < 0) throw ValidationError("constraint.B: negative budget");
    if (static_cast<int>(b.costs.size()) != good_count) {
      throw ValidationError("constraint.costs: expected " + std::to_string(good_count) +
                            " entries, got " + std::to_string(b.costs.size()));
    }
    for (int j = 0; j < good_count; ++j) {
      if (b.costs[j] <= 0) {
        throw ValidationError("constraint.costs[" + std::to_string(j) + "]: must be positive");
      }
    }
  }
  check_valuation_table(valuations, agent_count, good_count, strictness);
}

Value PrivateGoodsInstance::max_value() const { return max_entry(valuations); }

void PrivateGoodsInstance::validate(Strictness strictness) const {
  if (agent_count < 1) throw ValidationError("n: need at least one agent");
  if (good_count < 1) throw ValidationError("m: need at least one good");
  check_valuation_table(valuations, agent_count, good_count, strictness);
}

BigInt PublicDecisionsInstance::outcome_count() const {
  BigInt count = 1;
  for (const auto& issue : issues) count *= issue.alternatives;
  return count;
}

void PublicDecisionsInstance::validate() const {
  if (agent_count < 1) throw ValidationError("n: need at least one agent");
  if (issues.empty()) throw ValidationError("issues: need at least one issue");
  for (int j = 0; j < issue_count(); ++j) {
    const auto& issue = issues[j];
    if (issue.alternatives < 2) {
      throw ValidationError("issues[" + std::to_string(j) + "].alternatives: need at least 2");
    }
    if (static_cast<int>(issue.values.size()) != agent_count) {
      throw ValidationError("issues[" + std::to_string(j) + "].values: expected " +
                            std::to_string(agent_count) + " rows, got " +
                            std::to_string(issue.values.size()));
    }
    for (int i = 0; i < agent_count; ++i) {
      const auto& row = issue.values[i];
      if (static_cast<int>(row.size()) != issue.alternatives) {
        throw ValidationError("issues[" + std::to_string(j) + "].values[" + std::to_string(i) +
                              "]: expected " + std::to_string(issue.alternatives) +
                              " entries, got " + std::to_string(row.size()));
      }
      for (int a = 0; a < issue.alternatives; ++a) {
        if (row[a] < 0) {
          throw ValidationError("issues[" + std::to_string(j) + "].values[" + std::to_string(i) +
                                "][" + std::to_string(a) + "]: negative value");
        }
      }
    }
  }
}

Value selection_cost(const PublicGoodsInstance& inst, const PublicSelection& x) {
  const auto* b = inst.budget();
  Value total = 0;
  for (int g : x.goods) total += b ? b->costs[g] : 1;
  return total;
}

namespace {

// Shared shape check: strictly increasing indices in [0, bound).
bool strictly_increasing_in_range(const std::vector<int>& v, int bound) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= bound) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  return true;
}

}  // namespace

bool is_feasible(const PublicGoodsInstance& inst, const PublicSelection& x) {
  if (!strictly_increasing_in_range(x.goods, inst.good_count)) return false;
  if (const auto* c = std::get_if<Cardinality>(&inst.constraint)) {
    return static_cast<int>(x.goods.size()) <= c->k;
  }
  return selection_cost(inst, x) <= std::get<Budget>(inst.constraint).limit;
}

bool is_feasible(const PrivateGoodsInstance& inst, const PrivatePartition& x) {
  if (static_cast<int>(x.bundles.size()) != inst.agent_count) return false;
  std::vector<int> owner_count(inst.good_count, 0);
  for (const auto& bundle : x.bundles) {
    if (!strictly_increasing_in_range(bundle, inst.good_count)) return false;
    for (int g : bundle) ++owner_count[g];
  }
  return std::all_of(owner_count.begin(), owner_count.end(), [](int c) { return c == 1; });
}

bool is_feasible(const PublicDecisionsInstance& inst, const DecisionVector& x) {
  if (static_cast<int>(x.decisions.size()) != inst.issue_count()) return false;
  for (int j = 0; j < inst.issue_count(); ++j) {
    if (x.decisions[j] < 0 || x.decisions[j] >= inst.issues[j].alternatives) return false;
  }
  return true;
}

void require_feasible(const PublicGoodsInstance& inst, const PublicSelection& x) {
  if (!strictly_increasing_in_range(x.goods, inst.good_count)) {
    throw ValidationError("selection: indices must be strictly increasing and within range");
  }
  if (const auto* c = std::get_if<Cardinality>(&inst.constraint)) {
    if (static_cast<int>(x.goods.size()) > c->k) {
      throw ValidationError("selection: " + std::to_string(x.goods.size()) +
                            " goods exceed the cardinality bound k=" + std::to_string(c->k));
    }
  } else if (Value cost = selection_cost(inst, x);
             cost > std::get<Budget>(inst.constraint).limit) {
    throw ValidationError("selection: cost " + std::to_string(cost) + " exceeds the budget " +
                          std::to_string(std::get<Budget>(inst.constraint).limit));
  }
}

void require_feasible(const PrivateGoodsInstance& inst, const PrivatePartition& x) {
  if (static_cast<int>(x.bundles.size()) != inst.agent_count) {
    throw ValidationError("partition: expected " + std::to_string(inst.agent_count) +
                          " bundles, got " + std::to_string(x.bundles.size()));
  }
  std::vector<int> owner_count(inst.good_count, 0);
  for (std::size_t i = 0; i < x.bundles.size(); ++i) {
    if (!strictly_increasing_in_range(x.bundles[i], inst.good_count)) {
      throw ValidationError("partition[" + std::to_string(i) +
                            "]: indices must be strictly increasing and within range");
    }
    for (int g : x.bundles[i]) ++owner_count[g];
  }
  for (int g = 0; g < inst.good_count; ++g) {
    if (owner_count[g] == 0) {
      throw ValidationError("partition: good " + std::to_string(g + 1) + " is unassigned");
    }
    if (owner_count[g] > 1) {
      throw ValidationError("partition: good " + std::to_string(g + 1) +
                            " appears in several bundles");
    }
  }
}

void require_feasible(const PublicDecisionsInstance& inst, const DecisionVector& x) {
  if (static_cast<int>(x.decisions.size()) != inst.issue_count()) {
    throw ValidationError("decisions: expected " + std::to_string(inst.issue_count()) +
                          " entries, got " + std::to_string(x.decisions.size()));
  }
  for (int j = 0; j < inst.issue_count(); ++j) {
    if (x.decisions[j] < 0 || x.decisions[j] >= inst.issues[j].alternatives) {
      throw ValidationError("decisions[" + std::to_string(j) + "]: alternative out of range");
    }
  }
}

}  // namespace fairalloc
