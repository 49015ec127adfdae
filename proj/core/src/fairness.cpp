#include "fairalloc/fairness.hpp"

#include <algorithm>
#include <numeric>

#include "fairalloc/errors.hpp"
#include "subset_walk.hpp"

namespace fairalloc {

namespace {

int require_cardinality(const PublicGoodsInstance& inst) {
  inst.validate();
  if (!inst.is_cardinality()) {
    throw UnsupportedError(
        "share computations are defined against a cardinality bound; "
        "budget instances are not supported");
  }
  return inst.cardinality_k();
}

void require_agent(const PublicGoodsInstance& inst, int agent) {
  if (agent < 0 || agent >= inst.agent_count) throw ValidationError("agent index out of range");
}

// Sum of the agent's `count` largest values.
Value top_value_sum(const PublicGoodsInstance& inst, int agent, int count) {
  std::vector<Value> row = inst.valuations[agent];
  std::sort(row.begin(), row.end(), std::greater<>());
  count = std::min<int>(count, static_cast<int>(row.size()));
  return std::accumulate(row.begin(), row.begin() + count, Value{0});
}

}  // namespace

Rational prop_share(const PublicGoodsInstance& inst, int agent) {
  const int k = require_cardinality(inst);
  require_agent(inst, agent);
  return Rational(top_value_sum(inst, agent, k), inst.agent_count);
}

Value rrs_share(const PublicGoodsInstance& inst, int agent) {
  const int k = require_cardinality(inst);
  require_agent(inst, agent);
  return top_value_sum(inst, agent, k / inst.agent_count);
}

bool check_alpha_prop(const PublicGoodsInstance& inst, const PublicSelection& x,
                      const Rational& alpha) {
  require_cardinality(inst);
  require_feasible(inst, x);
  for (int i = 0; i < inst.agent_count; ++i) {
    Value have = 0;
    for (int g : x.goods) have += inst.value(i, g);
    if (Rational(have) < alpha * prop_share(inst, i)) return false;
  }
  return true;
}

bool check_alpha_rrs(const PublicGoodsInstance& inst, const PublicSelection& x,
                     const Rational& alpha) {
  require_cardinality(inst);
  require_feasible(inst, x);
  for (int i = 0; i < inst.agent_count; ++i) {
    Value have = 0;
    for (int g : x.goods) have += inst.value(i, g);
    if (Rational(have) < alpha * Rational(rrs_share(inst, i))) return false;
  }
  return true;
}

Prop1Check check_prop1_agent(const PublicGoodsInstance& inst, const PublicSelection& x, int agent,
                             const Rational& alpha) {
  const int k = require_cardinality(inst);
  require_feasible(inst, x);
  require_agent(inst, agent);

  const Rational target = alpha * prop_share(inst, agent);
  Value have = 0;
  std::vector<char> selected(inst.good_count, 0);
  for (int g : x.goods) {
    have += inst.value(agent, g);
    selected[g] = 1;
  }

  Prop1Check check;
  if (Rational(have) >= target) {
    check.satisfied = true;
    return check;
  }

  // Best single exchange under additive values: drop the cheapest selected
  // good (if dropping is needed to stay within k) and add the most valuable
  // unselected one.  Ties break toward the lowest index so witnesses are
  // deterministic.
  int best_add = -1;
  for (int g = 0; g < inst.good_count; ++g) {
    if (selected[g]) continue;
    if (best_add == -1 || inst.value(agent, g) > inst.value(agent, best_add)) best_add = g;
  }
  if (best_add == -1) return check;  // every good already selected; no exchange exists

  SwapWitness witness;
  Value reachable = have + inst.value(agent, best_add);
  if (static_cast<int>(x.goods.size()) >= k) {
    // Full selection: adding requires removing.  Removing the agent's
    // cheapest selected good maximizes what the exchange can reach.
    int best_remove = -1;
    for (int g : x.goods) {
      if (best_remove == -1 || inst.value(agent, g) < inst.value(agent, best_remove))
        best_remove = g;
    }
    if (best_remove == -1) return check;  // k == 0: nothing selectable
    witness.removed = best_remove;
    reachable -= inst.value(agent, best_remove);
  }
  witness.added = best_add;

  if (Rational(reachable) >= target) {
    check.satisfied = true;
    check.witness = witness;
  }
  return check;
}

Prop1Report check_prop1(const PublicGoodsInstance& inst, const PublicSelection& x,
                        const Rational& alpha) {
  Prop1Report report;
  report.all_satisfied = true;
  for (int i = 0; i < inst.agent_count; ++i) {
    report.agents.push_back(check_prop1_agent(inst, x, i, alpha));
    report.all_satisfied = report.all_satisfied && report.agents.back().satisfied;
  }
  return report;
}

ParetoCheck check_pareto_optimal(const PublicGoodsInstance& inst, const PublicSelection& x) {
  inst.validate();
  require_feasible(inst, x);

  std::vector<Value> have(inst.agent_count, 0);
  for (int i = 0; i < inst.agent_count; ++i) {
    for (int g : x.goods) have[i] += inst.value(i, g);
  }

  ParetoCheck check;
  check.optimal = true;
  detail::walk_feasible_subsets(inst, [&](std::uint64_t mask, const std::vector<Value>& utils,
                                          Value) {
    if (!check.optimal) return;  // keep the first dominator in stream order
    bool weakly_better = true;
    bool strictly_better = false;
    for (int i = 0; i < inst.agent_count && weakly_better; ++i) {
      weakly_better = utils[i] >= have[i];
      strictly_better = strictly_better || utils[i] > have[i];
    }
    if (weakly_better && strictly_better) {
      check.optimal = false;
      check.dominator = PublicSelection{detail::mask_to_goods(mask, inst.good_count)};
    }
  });
  return check;
}

FairnessReport audit(const PublicGoodsInstance& inst, const PublicSelection& x,
                     const Rational& alpha) {
  require_cardinality(inst);
  require_feasible(inst, x);

  FairnessReport report;
  report.alpha = alpha;
  for (int i = 0; i < inst.agent_count; ++i) {
    AgentFairness agent;
    agent.prop_share = prop_share(inst, i);
    agent.rrs_share = rrs_share(inst, i);

    Value have = 0;
    for (int g : x.goods) have += inst.value(i, g);
    if (agent.prop_share != 0) agent.alpha_prop = Rational(have) / agent.prop_share;
    if (agent.rrs_share != 0) agent.alpha_rrs = Rational(have, agent.rrs_share);

    Prop1Check prop1 = check_prop1_agent(inst, x, i, alpha);
    agent.prop1_satisfied = prop1.satisfied;
    agent.prop1_witness = prop1.witness;
    report.agents.push_back(std::move(agent));
  }

  ParetoCheck pareto = check_pareto_optimal(inst, x);
  report.pareto_optimal = pareto.optimal;
  report.pareto_dominator = pareto.dominator;
  return report;
}

}  // namespace fairalloc
