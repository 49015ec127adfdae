#include "fairalloc/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "fairalloc/errors.hpp"
#include "subset_walk.hpp"

namespace fairalloc {

const char* objective_name(Objective o) { return o == Objective::mnw ? "mnw" : "leximin"; }

Objective objective_from_name(const std::string& name) {
  if (name == "mnw") return Objective::mnw;
  if (name == "leximin") return Objective::leximin;
  throw ValidationError("unknown objective \"" + name + "\" (expected mnw or leximin)");
}

namespace {

BigInt selection_rank(const std::vector<int>& goods) {
  BigInt rank = 0;
  for (int g : goods) boost::multiprecision::bit_set(rank, static_cast<unsigned>(g));
  return rank;
}

SolveResult make_public_result(const PublicGoodsInstance& inst, std::vector<int> goods,
                               Objective objective, std::string method) {
  SolveResult result;
  result.objective = objective;
  result.method = std::move(method);
  result.tie_break_rank = selection_rank(goods);
  PublicSelection x{std::move(goods)};
  std::vector<Value> utils = utilities(inst, x);
  result.score = nash_score_of(utils);
  result.utilities = UtilityVector::of(std::move(utils));
  result.allocation = std::move(x);
  return result;
}

void require_subset_scale(const PublicGoodsInstance& inst, const SolveLimits& limits) {
  const BigInt states = ipow(2, static_cast<unsigned long>(inst.good_count));
  if (inst.good_count > 62 || states > limits.max_states) {
    throw ScaleRefusal("brute force would enumerate 2^" + std::to_string(inst.good_count) +
                           " = " + to_decimal(states) + " subsets, above the limit of " +
                           std::to_string(limits.max_states),
                       to_decimal(states));
  }
}

// Lazily-scored Nash comparison: counting positives is cheap, so the product
// is only computed when the count ties or beats the incumbent.
struct MnwBest {
  bool any = false;
  NashScore score;
  std::uint64_t mask = 0;

  bool offer(const std::vector<Value>& utils, std::uint64_t mask_in) {
    int positives = 0;
    for (Value u : utils) positives += u > 0;
    if (any && positives < score.positive_count) return false;
    NashScore candidate;
    candidate.positive_count = positives;
    for (Value u : utils) {
      if (u > 0) candidate.product *= u;
    }
    if (!any || score < candidate) {
      any = true;
      score = std::move(candidate);
      mask = mask_in;
      return true;
    }
    return false;
  }
};

}  // namespace

SolveResult brute_force_mnw(const PublicGoodsInstance& inst, const SolveLimits& limits) {
  inst.validate();
  require_subset_scale(inst, limits);

  MnwBest best;
  detail::walk_feasible_subsets(
      inst, [&](std::uint64_t mask, const std::vector<Value>& utils, Value) {
        best.offer(utils, mask);
      });
  return make_public_result(inst, detail::mask_to_goods(best.mask, inst.good_count),
                            Objective::mnw, "bruteforce");
}

SolveResult brute_force_leximin(const PublicGoodsInstance& inst, const SolveLimits& limits) {
  inst.validate();
  require_subset_scale(inst, limits);

  bool any = false;
  std::vector<Value> best_sorted;
  std::uint64_t best_mask = 0;
  std::vector<Value> scratch;
  detail::walk_feasible_subsets(
      inst, [&](std::uint64_t mask, const std::vector<Value>& utils, Value) {
        scratch = utils;
        std::sort(scratch.begin(), scratch.end());
        if (!any || best_sorted < scratch) {
          any = true;
          best_sorted = scratch;
          best_mask = mask;
        }
      });
  return make_public_result(inst, detail::mask_to_goods(best_mask, inst.good_count),
                            Objective::leximin, "bruteforce");
}

namespace {

// Shared odometer loop for the decisions and private-goods oracles: visits
// digit vectors in lexicographic order (last digit fastest), maintaining
// utilities incrementally through a per-digit-change callback.
template <typename OnDigit, typename OnState>
void walk_odometer(const std::vector<int>& radix, OnDigit&& on_digit, OnState&& on_state) {
  const int width = static_cast<int>(radix.size());
  std::vector<int> digits(width, 0);
  BigInt position = 0;
  for (;;) {
    on_state(digits, position);
    ++position;
    int p = width - 1;
    for (; p >= 0; --p) {
      if (digits[p] + 1 < radix[p]) {
        on_digit(p, digits[p], digits[p] + 1);
        ++digits[p];
        break;
      }
      on_digit(p, digits[p], 0);
      digits[p] = 0;
    }
    if (p < 0) return;
  }
}

struct LeximinBest {
  bool any = false;
  std::vector<Value> sorted;

  bool offer(std::vector<Value> candidate_sorted) {
    if (!any || sorted < candidate_sorted) {
      any = true;
      sorted = std::move(candidate_sorted);
      return true;
    }
    return false;
  }
};

}  // namespace

SolveResult brute_force_decisions(const PublicDecisionsInstance& inst, Objective objective,
                                  const SolveLimits& limits) {
  inst.validate();
  const BigInt states = inst.outcome_count();
  if (states > limits.max_states) {
    throw ScaleRefusal("brute force would enumerate " + to_decimal(states) +
                           " decision vectors, above the limit of " +
                           std::to_string(limits.max_states),
                       to_decimal(states));
  }

  std::vector<int> radix(inst.issue_count());
  for (int j = 0; j < inst.issue_count(); ++j) radix[j] = inst.issues[j].alternatives;

  // Start: every issue decided to alternative 0.
  std::vector<Value> utils(inst.agent_count, 0);
  for (int j = 0; j < inst.issue_count(); ++j) {
    for (int i = 0; i < inst.agent_count; ++i) utils[i] += inst.value(i, j, 0);
  }

  MnwBest mnw_best;
  LeximinBest lex_best;
  std::vector<int> best_digits(inst.issue_count(), 0);
  BigInt best_position = 0;
  std::vector<Value> scratch;

  walk_odometer(
      radix,
      [&](int issue, int old_alt, int new_alt) {
        for (int i = 0; i < inst.agent_count; ++i) {
          utils[i] += inst.value(i, issue, new_alt) - inst.value(i, issue, old_alt);
        }
      },
      [&](const std::vector<int>& digits, const BigInt& position) {
        bool improved = false;
        if (objective == Objective::mnw) {
          improved = mnw_best.offer(utils, 0);
        } else {
          scratch = utils;
          std::sort(scratch.begin(), scratch.end());
          improved = lex_best.offer(scratch);
        }
        if (improved) {
          best_digits = digits;
          best_position = position;
        }
      });

  SolveResult result;
  result.objective = objective;
  result.method = "bruteforce";
  result.tie_break_rank = best_position;
  DecisionVector x{best_digits};
  std::vector<Value> final_utils = utilities(inst, x);
  result.score = nash_score_of(final_utils);
  result.utilities = UtilityVector::of(std::move(final_utils));
  result.allocation = std::move(x);
  return result;
}

SolveResult brute_force_private(const PrivateGoodsInstance& inst, Objective objective,
                                const SolveLimits& limits) {
  inst.validate();
  const BigInt states =
      ipow(inst.agent_count, static_cast<unsigned long>(inst.good_count));
  if (states > limits.max_states) {
    throw ScaleRefusal("brute force would enumerate " + std::to_string(inst.agent_count) + "^" +
                           std::to_string(inst.good_count) + " = " + to_decimal(states) +
                           " assignments, above the limit of " +
                           std::to_string(limits.max_states),
                       to_decimal(states));
  }

  std::vector<int> radix(inst.good_count, inst.agent_count);
  std::vector<Value> utils(inst.agent_count, 0);
  // Start: every good owned by agent 0.
  for (int j = 0; j < inst.good_count; ++j) utils[0] += inst.value(0, j);

  MnwBest mnw_best;
  LeximinBest lex_best;
  std::vector<int> best_owner(inst.good_count, 0);
  BigInt best_position = 0;
  std::vector<Value> scratch;

  walk_odometer(
      radix,
      [&](int good, int old_owner, int new_owner) {
        utils[old_owner] -= inst.value(old_owner, good);
        utils[new_owner] += inst.value(new_owner, good);
      },
      [&](const std::vector<int>& owner, const BigInt& position) {
        bool improved = false;
        if (objective == Objective::mnw) {
          improved = mnw_best.offer(utils, 0);
        } else {
          scratch = utils;
          std::sort(scratch.begin(), scratch.end());
          improved = lex_best.offer(scratch);
        }
        if (improved) {
          best_owner = owner;
          best_position = position;
        }
      });

  PrivatePartition x;
  x.bundles.assign(inst.agent_count, {});
  for (int j = 0; j < inst.good_count; ++j) x.bundles[best_owner[j]].push_back(j);

  SolveResult result;
  result.objective = objective;
  result.method = "bruteforce";
  result.tie_break_rank = best_position;
  std::vector<Value> final_utils = utilities(inst, x);
  result.score = nash_score_of(final_utils);
  result.utilities = UtilityVector::of(std::move(final_utils));
  result.allocation = std::move(x);
  return result;
}

AgentTypes group_agent_types(const PublicGoodsInstance& inst) {
  AgentTypes types;
  std::map<std::vector<Value>, int> seen;
  for (int i = 0; i < inst.agent_count; ++i) {
    auto [it, inserted] = seen.try_emplace(inst.valuations[i], static_cast<int>(types.weight.size()));
    if (inserted) {
      types.weight.push_back(0);
      types.representative.push_back(i);
    }
    types.type_of_agent.push_back(it->second);
    ++types.weight[it->second];
  }
  return types;
}

GoodTypes group_good_types(const PublicGoodsInstance& inst) {
  GoodTypes types;
  const Budget budget = inst.as_budget();
  std::map<std::pair<std::vector<Value>, Value>, int> seen;
  for (int j = 0; j < inst.good_count; ++j) {
    std::vector<Value> column(inst.agent_count);
    for (int i = 0; i < inst.agent_count; ++i) column[i] = inst.value(i, j);
    auto [it, inserted] = seen.try_emplace({std::move(column), budget.costs[j]},
                                           static_cast<int>(types.members.size()));
    if (inserted) types.members.emplace_back();
    types.type_of_good.push_back(it->second);
    types.members[it->second].push_back(j);
  }
  return types;
}

DpTable build_agent_type_table(const PublicGoodsInstance& inst, const SolveLimits& limits) {
  inst.validate();
  DpTable table;
  table.types = group_agent_types(inst);
  const int t = static_cast<int>(table.types.weight.size());
  const Budget budget = inst.as_budget();

  // Dense state bound: each of the t per-type utilities lies in [0, mV], and
  // the classic table carries a last-good axis of size m+1.
  const BigInt value_range = BigInt(inst.good_count) * inst.max_value() + 1;
  const BigInt dense = ipow(value_range, static_cast<unsigned long>(t)) * (inst.good_count + 1);
  if (dense > limits.max_states) {
    throw ScaleRefusal("dynamic program over " + std::to_string(t) +
                           " agent types would need up to " + to_decimal(dense) +
                           " cells, above the limit of " + std::to_string(limits.max_states),
                       to_decimal(dense));
  }

  std::vector<std::vector<Value>> column(inst.good_count, std::vector<Value>(t, 0));
  for (int j = 0; j < inst.good_count; ++j) {
    for (int ell = 0; ell < t; ++ell) {
      column[j][ell] = inst.value(table.types.representative[ell], j);
    }
  }

  table.cells.emplace(std::vector<Value>(t, 0), DpCell{});
  for (int j = 0; j < inst.good_count; ++j) {
    // Snapshot before extending: a selection may use good j at most once, so
    // round j must only extend states built from goods < j.  Two paths to the
    // same key admit exactly the same completions from goods > j, so keeping
    // the cheaper one preserves optimality.
    const std::vector<std::pair<std::vector<Value>, DpCell>> snapshot(table.cells.begin(),
                                                                      table.cells.end());
    for (const auto& [key, cell] : snapshot) {
      const Value extended_cost = cell.cost + budget.costs[j];
      if (extended_cost > budget.limit) continue;
      std::vector<Value> extended_key(t);
      for (int ell = 0; ell < t; ++ell) extended_key[ell] = key[ell] + column[j][ell];
      auto [it, inserted] = table.cells.try_emplace(std::move(extended_key));
      if (inserted || extended_cost < it->second.cost) {
        it->second.cost = extended_cost;
        it->second.goods = cell.goods;
        it->second.goods.push_back(j);
      }
    }
  }
  return table;
}

std::vector<int> reconstruct_selection(const DpTable& table, const std::vector<Value>& key) {
  auto it = table.cells.find(key);
  if (it == table.cells.end()) throw ValidationError("dp table has no cell for the given state");
  return it->second.goods;
}

namespace {

// Expand a per-type utility vector to the sorted per-agent vector.
std::vector<Value> expand_sorted(const AgentTypes& types, const std::vector<Value>& key) {
  std::vector<Value> expanded;
  expanded.reserve(types.type_of_agent.size());
  for (std::size_t ell = 0; ell < types.weight.size(); ++ell) {
    expanded.insert(expanded.end(), types.weight[ell], key[ell]);
  }
  std::sort(expanded.begin(), expanded.end());
  return expanded;
}

NashScore expand_score(const AgentTypes& types, const std::vector<Value>& key) {
  NashScore score;
  for (std::size_t ell = 0; ell < types.weight.size(); ++ell) {
    if (key[ell] > 0) {
      score.positive_count += types.weight[ell];
      score.product *= ipow(key[ell], static_cast<unsigned long>(types.weight[ell]));
    }
  }
  return score;
}

}  // namespace

SolveResult dp_const_agent_types(const PublicGoodsInstance& inst, Objective objective,
                                 const SolveLimits& limits) {
  DpTable table = build_agent_type_table(inst, limits);

  const std::vector<Value>* best_key = nullptr;
  NashScore best_score;
  std::vector<Value> best_sorted;
  for (const auto& [key, cell] : table.cells) {
    if (objective == Objective::mnw) {
      NashScore score = expand_score(table.types, key);
      if (!best_key || best_score < score) {
        best_key = &key;
        best_score = std::move(score);
      }
    } else {
      std::vector<Value> sorted = expand_sorted(table.types, key);
      if (!best_key || best_sorted < sorted) {
        best_key = &key;
        best_sorted = std::move(sorted);
      }
    }
  }

  SolveResult result =
      make_public_result(inst, reconstruct_selection(table, *best_key), objective,
                         "dp-agent-types");
  return result;
}

SolveResult enum_const_good_types(const PublicGoodsInstance& inst, Objective objective,
                                  const SolveLimits& limits) {
  inst.validate();
  const GoodTypes types = group_good_types(inst);
  const int t = static_cast<int>(types.members.size());
  const Budget budget = inst.as_budget();

  BigInt states = 1;
  for (const auto& members : types.members) states *= static_cast<int>(members.size()) + 1;
  if (states > limits.max_states) {
    throw ScaleRefusal("count-vector enumeration over " + std::to_string(t) +
                           " good types would visit " + to_decimal(states) +
                           " states, above the limit of " + std::to_string(limits.max_states),
                       to_decimal(states));
  }

  // Per-type unit value for each agent and per-type unit cost (identical
  // within a type by construction).
  std::vector<std::vector<Value>> unit_value(t, std::vector<Value>(inst.agent_count, 0));
  std::vector<Value> unit_cost(t, 0);
  for (int ell = 0; ell < t; ++ell) {
    const int rep = types.members[ell].front();
    for (int i = 0; i < inst.agent_count; ++i) unit_value[ell][i] = inst.value(i, rep);
    unit_cost[ell] = budget.costs[rep];
  }

  std::vector<int> radix(t);
  for (int ell = 0; ell < t; ++ell) radix[ell] = static_cast<int>(types.members[ell].size()) + 1;

  std::vector<Value> utils(inst.agent_count, 0);
  Value cost = 0;

  MnwBest mnw_best;
  LeximinBest lex_best;
  std::vector<int> best_counts(t, 0);
  std::vector<Value> scratch;

  // The all-zero count vector (cost 0) is always feasible and initializes the
  // incumbent on the first visit.
  walk_odometer(
      radix,
      [&](int ell, int old_count, int new_count) {
        const Value delta = new_count - old_count;
        cost += delta * unit_cost[ell];
        for (int i = 0; i < inst.agent_count; ++i) utils[i] += delta * unit_value[ell][i];
      },
      [&](const std::vector<int>& counts, const BigInt&) {
        if (cost > budget.limit) return;
        bool improved = false;
        if (objective == Objective::mnw) {
          improved = mnw_best.offer(utils, 0);
        } else {
          scratch = utils;
          std::sort(scratch.begin(), scratch.end());
          improved = lex_best.offer(scratch);
        }
        if (improved) best_counts = counts;
      });

  std::vector<int> goods;
  for (int ell = 0; ell < t; ++ell) {
    goods.insert(goods.end(), types.members[ell].begin(),
                 types.members[ell].begin() + best_counts[ell]);
  }
  std::sort(goods.begin(), goods.end());
  return make_public_result(inst, std::move(goods), objective, "enum-good-types");
}

std::vector<int> additive_maximize(const PublicGoodsInstance& inst, int agent, int size_cap) {
  std::vector<int> order(inst.good_count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.value(agent, a) > inst.value(agent, b);
  });
  order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(size_cap)));
  std::sort(order.begin(), order.end());
  return order;
}

SolveResult alg_greedy(const PublicGoodsInstance& inst, const MaximizeFn& maximize) {
  inst.validate();
  const int k = inst.cardinality_k();
  const int n = inst.agent_count;
  if (k < n) {
    throw UnsupportedError("greedy requires k >= n (got k=" + std::to_string(k) +
                           ", n=" + std::to_string(n) + ")");
  }

  const int share_size = k / n;
  std::vector<char> selected(inst.good_count, 0);
  int selected_count = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> bundle = maximize(inst, i, share_size);
    if (static_cast<int>(bundle.size()) > share_size) {
      throw ValidationError("maximize returned more than floor(k/n) goods for agent " +
                            std::to_string(i + 1));
    }
    for (int g : bundle) {
      if (g < 0 || g >= inst.good_count) {
        throw ValidationError("maximize returned an out-of-range good for agent " +
                              std::to_string(i + 1));
      }
      if (!selected[g]) {
        selected[g] = 1;
        ++selected_count;
      }
    }
  }

  // Pad the union up to exactly k goods, preferring the highest total value
  // over all agents and breaking ties toward the lowest index.
  while (selected_count < k) {
    int best = -1;
    Value best_total = -1;
    for (int g = 0; g < inst.good_count; ++g) {
      if (selected[g]) continue;
      Value total = 0;
      for (int i = 0; i < n; ++i) total += inst.value(i, g);
      if (total > best_total) {
        best_total = total;
        best = g;
      }
    }
    selected[best] = 1;
    ++selected_count;
  }

  std::vector<int> goods;
  for (int g = 0; g < inst.good_count; ++g) {
    if (selected[g]) goods.push_back(g);
  }
  return make_public_result(inst, std::move(goods), Objective::mnw, "greedy");
}

}  // namespace fairalloc
