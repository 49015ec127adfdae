#include "fairalloc/objective.hpp"

#include <algorithm>

#include "fairalloc/errors.hpp"

namespace fairalloc {

bool operator<(const NashScore& a, const NashScore& b) {
  if (a.positive_count != b.positive_count) return a.positive_count < b.positive_count;
  return a.product < b.product;
}

UtilityVector UtilityVector::of(std::vector<Value> raw) {
  UtilityVector u;
  u.sorted = raw;
  std::sort(u.sorted.begin(), u.sorted.end());
  u.raw = std::move(raw);
  return u;
}

std::strong_ordering leximin_compare(const UtilityVector& a, const UtilityVector& b) {
  if (a.sorted.size() != b.sorted.size()) {
    throw ValidationError("leximin comparison requires equal-length utility vectors");
  }
  for (std::size_t i = 0; i < a.sorted.size(); ++i) {
    if (a.sorted[i] != b.sorted[i]) {
      return a.sorted[i] < b.sorted[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering leximin_compare(std::vector<Value> a, std::vector<Value> b) {
  return leximin_compare(UtilityVector::of(std::move(a)), UtilityVector::of(std::move(b)));
}

Value utility(const PublicGoodsInstance& inst, const PublicSelection& x, int agent) {
  inst.validate();
  require_feasible(inst, x);
  if (agent < 0 || agent >= inst.agent_count) throw ValidationError("agent index out of range");
  Value total = 0;
  for (int g : x.goods) total += inst.value(agent, g);
  return total;
}

Value utility(const PrivateGoodsInstance& inst, const PrivatePartition& x, int agent) {
  inst.validate();
  require_feasible(inst, x);
  if (agent < 0 || agent >= inst.agent_count) throw ValidationError("agent index out of range");
  Value total = 0;
  for (int g : x.bundles[agent]) total += inst.value(agent, g);
  return total;
}

Value utility(const PublicDecisionsInstance& inst, const DecisionVector& x, int agent) {
  inst.validate();
  require_feasible(inst, x);
  if (agent < 0 || agent >= inst.agent_count) throw ValidationError("agent index out of range");
  Value total = 0;
  for (int j = 0; j < inst.issue_count(); ++j) total += inst.value(agent, j, x.decisions[j]);
  return total;
}

namespace {

// The public utility() entry points re-validate per call; the vector forms
// validate once and sum directly.
template <typename Instance, typename Alloc, typename PerAgent>
std::vector<Value> utilities_impl(const Instance& inst, const Alloc& x, PerAgent per_agent) {
  inst.validate();
  require_feasible(inst, x);
  std::vector<Value> result(inst.agent_count, 0);
  for (int i = 0; i < inst.agent_count; ++i) result[i] = per_agent(i);
  return result;
}

}  // namespace

std::vector<Value> utilities(const PublicGoodsInstance& inst, const PublicSelection& x) {
  return utilities_impl(inst, x, [&](int i) {
    Value total = 0;
    for (int g : x.goods) total += inst.value(i, g);
    return total;
  });
}

std::vector<Value> utilities(const PrivateGoodsInstance& inst, const PrivatePartition& x) {
  return utilities_impl(inst, x, [&](int i) {
    Value total = 0;
    for (int g : x.bundles[i]) total += inst.value(i, g);
    return total;
  });
}

std::vector<Value> utilities(const PublicDecisionsInstance& inst, const DecisionVector& x) {
  return utilities_impl(inst, x, [&](int i) {
    Value total = 0;
    for (int j = 0; j < inst.issue_count(); ++j) total += inst.value(i, j, x.decisions[j]);
    return total;
  });
}

NashScore nash_score_of(const std::vector<Value>& utilities) {
  NashScore score;
  for (Value u : utilities) {
    if (u > 0) {
      ++score.positive_count;
      score.product *= u;
    }
  }
  return score;
}

NashScore nash_score(const PublicGoodsInstance& inst, const PublicSelection& x) {
  return nash_score_of(utilities(inst, x));
}

NashScore nash_score(const PrivateGoodsInstance& inst, const PrivatePartition& x) {
  return nash_score_of(utilities(inst, x));
}

NashScore nash_score(const PublicDecisionsInstance& inst, const DecisionVector& x) {
  return nash_score_of(utilities(inst, x));
}

}  // namespace fairalloc
