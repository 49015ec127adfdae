#include "fairalloc/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fairalloc/errors.hpp"

namespace fairalloc {

const char* gadget_objective_name(GadgetObjective o) {
  switch (o) {
    case GadgetObjective::mnw: return "mnw";
    case GadgetObjective::leximin: return "leximin";
    case GadgetObjective::maxmin: return "maxmin";
  }
  return "?";
}

const char* threshold_kind_name(GadgetThreshold::Kind kind) {
  switch (kind) {
    case GadgetThreshold::Kind::positive_count: return "positive-count";
    case GadgetThreshold::Kind::nash_product: return "nash-product";
    case GadgetThreshold::Kind::min_utility: return "min-utility";
    case GadgetThreshold::Kind::sorted_lex: return "sorted-lex";
  }
  return "?";
}

bool gadget_verdict(const GadgetInstance& gadget, const SolveLimits& limits) {
  const SolveResult optimum = gadget.objective == GadgetObjective::mnw
                                  ? brute_force_mnw(gadget.instance, limits)
                                  : brute_force_leximin(gadget.instance, limits);
  const GadgetThreshold& threshold = gadget.threshold;
  switch (threshold.kind) {
    case GadgetThreshold::Kind::positive_count:
      return BigInt(optimum.score.positive_count) >= threshold.bound;
    case GadgetThreshold::Kind::nash_product:
      return optimum.score.positive_count == gadget.instance.agent_count &&
             optimum.score.product >= threshold.bound;
    case GadgetThreshold::Kind::min_utility:
      return BigInt(optimum.utilities.sorted.front()) >= threshold.bound;
    case GadgetThreshold::Kind::sorted_lex: {
      const auto& sorted = optimum.utilities.sorted;
      if (sorted.size() != threshold.sorted_bound.size()) {
        throw ValidationError("sorted-lex threshold length does not match the agent count");
      }
      return !std::lexicographical_compare(sorted.begin(), sorted.end(),
                                           threshold.sorted_bound.begin(),
                                           threshold.sorted_bound.end());
    }
  }
  throw ValidationError("unknown threshold kind");
}

namespace {

void check_family(int element_count, const std::vector<std::vector<int>>& family,
                  bool require_cover) {
  if (element_count < 1) throw ValidationError("family: need at least one element");
  if (family.empty()) throw ValidationError("family: need at least one set");
  std::vector<char> covered(element_count, 0);
  for (std::size_t s = 0; s < family.size(); ++s) {
    std::vector<int> sorted = family[s];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t p = 0; p < sorted.size(); ++p) {
      if (sorted[p] < 0 || sorted[p] >= element_count) {
        throw ValidationError("family[" + std::to_string(s) + "]: element out of range");
      }
      if (p > 0 && sorted[p] == sorted[p - 1]) {
        throw ValidationError("family[" + std::to_string(s) + "]: duplicate element");
      }
      covered[sorted[p]] = 1;
    }
  }
  if (require_cover) {
    for (int e = 0; e < element_count; ++e) {
      if (!covered[e]) {
        // An uncovered element would be an agent valuing no good, outside the
        // model (and the source problem is trivially NO).
        throw ValidationError("family: element " + std::to_string(e + 1) +
                              " appears in no set; every agent must value some good");
      }
    }
  }
}

}  // namespace

GadgetInstance from_set_cover(int universe_size, const std::vector<std::vector<int>>& family,
                              int k) {
  check_family(universe_size, family, /*require_cover=*/true);
  const int m = static_cast<int>(family.size());
  if (k < 0 || k > m) throw ValidationError("k: must lie in [0, family size]");

  GadgetInstance gadget;
  gadget.gadget = "setcover";
  gadget.objective = GadgetObjective::mnw;

  PublicGoodsInstance& inst = gadget.instance;
  inst.agent_count = universe_size;
  inst.good_count = m;
  inst.constraint = Cardinality{k};
  inst.valuations.assign(universe_size, std::vector<Value>(m, 0));
  for (int s = 0; s < m; ++s) {
    for (int e : family[s]) inst.valuations[e][s] = 1;
  }
  inst.validate();

  gadget.threshold.kind = GadgetThreshold::Kind::positive_count;
  gadget.threshold.bound = universe_size;
  gadget.yes_iff = "some k sets cover the universe (every agent positively served)";
  return gadget;
}

BigInt max_product_bounded_sum(int n, Value lower, Value remainder) {
  if (n < 1) throw ValidationError("max_product_bounded_sum: need n >= 1");
  if (lower < 1) throw ValidationError("max_product_bounded_sum: need lower >= 1");
  if (remainder < 0 || remainder > n) {
    throw ValidationError("max_product_bounded_sum: remainder must lie in [0, n]");
  }
  return ipow(lower + 1, static_cast<unsigned long>(remainder)) *
         ipow(lower, static_cast<unsigned long>(n - remainder));
}

GadgetInstance from_ersp(int element_count, const std::vector<std::vector<int>>& family,
                         int set_size, int packing_size) {
  check_family(element_count, family, /*require_cover=*/false);
  const int n = element_count;
  const int family_size = static_cast<int>(family.size());
  if (set_size < 1) throw ValidationError("set_size: must be positive");
  for (std::size_t s = 0; s < family.size(); ++s) {
    if (static_cast<int>(family[s].size()) != set_size) {
      throw ValidationError("family[" + std::to_string(s) + "]: regular family needs sets of size " +
                            std::to_string(set_size));
    }
  }
  if (packing_size < 0 || packing_size > family_size) {
    throw ValidationError("packing_size: must lie in [0, family size]");
  }
  if (static_cast<long long>(set_size) * packing_size > n) {
    throw ValidationError("packing_size: a packing of " + std::to_string(packing_size) +
                          " disjoint sets of size " + std::to_string(set_size) +
                          " cannot fit in " + std::to_string(n) + " elements");
  }

  GadgetInstance gadget;
  gadget.gadget = "ersp";
  gadget.objective = GadgetObjective::mnw;

  // Family goods first, then n universally-valued dummy goods.
  PublicGoodsInstance& inst = gadget.instance;
  inst.agent_count = n;
  inst.good_count = family_size + n;
  inst.constraint = Cardinality{packing_size + n};
  inst.valuations.assign(n, std::vector<Value>(inst.good_count, 0));
  for (int s = 0; s < family_size; ++s) {
    for (int e : family[s]) inst.valuations[e][s] = 1;
  }
  for (int e = 0; e < n; ++e) {
    for (int d = 0; d < n; ++d) inst.valuations[e][family_size + d] = 1;
  }
  inst.validate();

  gadget.threshold.kind = GadgetThreshold::Kind::nash_product;
  gadget.threshold.bound =
      max_product_bounded_sum(n, n, static_cast<Value>(set_size) * packing_size);
  gadget.yes_iff = "the family contains " + std::to_string(packing_size) +
                   " pairwise-disjoint sets (an exact packing)";
  return gadget;
}

std::vector<Value> eqsp_pad(std::vector<Value> values) {
  BigInt sum = 0;
  for (Value a : values) {
    if (a < 0) throw ValidationError("values: negative entry");
    sum += a;
  }
  if (sum == 0) throw ValidationError("values: all-zero multiset");
  if (sum % 2 != 0) {
    throw ValidationError("values: the sum must be even (an odd sum cannot split equally)");
  }
  const BigInt twice = 2 * sum;
  // Append zeros until the count is even and divides twice the sum; both the
  // per-good constant C = 2R/m and the threshold need integrality.  m = 2R
  // always works, so the loop terminates whenever it starts below it.
  while (static_cast<int>(values.size()) % 2 != 0 ||
         twice % static_cast<int>(values.size()) != 0) {
    if (BigInt(values.size()) > twice) {
      throw ValidationError(
          "values: more entries than twice the sum; no zero-padding can balance the "
          "construction");
    }
    values.push_back(0);
  }
  return values;
}

GadgetInstance from_eqsp(const std::vector<Value>& values, GadgetObjective objective) {
  if (objective == GadgetObjective::leximin) {
    throw ValidationError("the partition gadget targets mnw or maxmin");
  }
  const std::vector<Value> padded = eqsp_pad(values);
  const int m = static_cast<int>(padded.size());
  Value sum = std::accumulate(padded.begin(), padded.end(), Value{0});
  const Value c = 2 * sum / m;

  GadgetInstance gadget;
  gadget.gadget = "eqsp";
  gadget.objective = objective;

  // Both rows are positive everywhere (values sit on a base of R or C), so
  // every size-m/2 selection has total utility R + Rm split between the two
  // agents; the split is even exactly on equal-sum halves.
  PublicGoodsInstance& inst = gadget.instance;
  inst.agent_count = 2;
  inst.good_count = m;
  inst.constraint = Cardinality{m / 2};
  inst.valuations.assign(2, std::vector<Value>(m, 0));
  for (int j = 0; j < m; ++j) {
    inst.valuations[0][j] = padded[j] + sum;
    inst.valuations[1][j] = c + sum - padded[j];
  }
  inst.validate();

  const BigInt half = BigInt(sum) * (1 + m) / 2;
  if (objective == GadgetObjective::mnw) {
    gadget.threshold.kind = GadgetThreshold::Kind::nash_product;
    gadget.threshold.bound = half * half;
  } else {
    gadget.threshold.kind = GadgetThreshold::Kind::min_utility;
    gadget.threshold.bound = half;
  }
  gadget.yes_iff = "the values split into two halves of equal sum and equal size";
  return gadget;
}

GadgetInstance from_monotone_sat(int variable_count, const std::vector<std::vector<int>>& clauses,
                                 int true_budget) {
  check_family(variable_count, clauses, /*require_cover=*/false);
  for (std::size_t s = 0; s < clauses.size(); ++s) {
    if (clauses[s].empty()) {
      throw ValidationError("clauses[" + std::to_string(s) + "]: empty clause");
    }
  }
  const int clause_count = static_cast<int>(clauses.size());
  if (true_budget < 0 || true_budget > variable_count) {
    throw ValidationError("true_budget: must lie in [0, variable count]");
  }

  const int dummy_goods = clause_count - true_budget + 1;
  if (dummy_goods < 1) {
    throw ValidationError("true_budget: exceeds the clause count; the construction needs "
                          "clause_count - true_budget + 1 >= 1 dummy goods");
  }

  GadgetInstance gadget;
  gadget.gadget = "msat";
  gadget.objective = GadgetObjective::leximin;

  // Variable goods first, then the dummy block.  Selecting all dummies plus
  // at most `true_budget` variable goods is the only way to lift the dummy
  // agent to clause_count - true_budget + 1; the second leximin level then
  // asks every clause agent for one selected variable.
  PublicGoodsInstance& inst = gadget.instance;
  inst.agent_count = clause_count + 1;
  inst.good_count = variable_count + dummy_goods;
  inst.constraint = Cardinality{clause_count + 1};
  inst.valuations.assign(inst.agent_count, std::vector<Value>(inst.good_count, 0));
  for (int s = 0; s < clause_count; ++s) {
    for (int v : clauses[s]) inst.valuations[s][v] = 1;
    for (int d = 0; d < dummy_goods; ++d) inst.valuations[s][variable_count + d] = 1;
  }
  for (int d = 0; d < dummy_goods; ++d) {
    inst.valuations[clause_count][variable_count + d] = 1;
  }
  inst.validate();

  gadget.threshold.kind = GadgetThreshold::Kind::sorted_lex;
  gadget.threshold.sorted_bound.assign(inst.agent_count, dummy_goods + 1);
  gadget.threshold.sorted_bound.front() = dummy_goods;
  gadget.yes_iff = "some assignment with at most " + std::to_string(true_budget) +
                   " true variables satisfies every clause";
  return gadget;
}

}  // namespace fairalloc
