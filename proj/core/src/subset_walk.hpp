#pragma once

// Internal fast path shared by the brute-force solvers and the Pareto check.
// Not installed.

#include <cstdint>
#include <string>
#include <vector>

#include "fairalloc/errors.hpp"
#include "fairalloc/instance.hpp"

namespace fairalloc::detail {

// Visits every subset of the instance's goods in increasing counter order
// (good j = bit j), maintaining per-agent utilities and the selection cost
// incrementally: stepping the counter from c to c+1 flips the trailing bits,
// which is amortized O(1) flips per step.  `fn(mask, utils, cost)` runs for
// *feasible* subsets only.
template <typename Fn>
void walk_feasible_subsets(const PublicGoodsInstance& inst, Fn&& fn) {
  if (inst.good_count > 62) {
    throw ScaleRefusal("subset enumeration over " + std::to_string(inst.good_count) +
                           " goods exceeds the 62-bit counter",
                       to_decimal(ipow(2, static_cast<unsigned long>(inst.good_count))));
  }
  const auto* budget = inst.budget();
  const Value limit = budget ? budget->limit : static_cast<Value>(inst.cardinality_k());
  const std::uint64_t end = std::uint64_t{1} << inst.good_count;

  std::vector<Value> utils(inst.agent_count, 0);
  Value cost = 0;  // total cost under budget, |x| under cardinality
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (mask != 0) {
      // Flip the bits where mask differs from mask-1: the lowest set bit of
      // mask turns on, everything below it turns off.
      std::uint64_t diff = mask ^ (mask - 1);
      for (int j = 0; diff != 0; ++j, diff >>= 1) {
        if (!(diff & 1)) continue;
        const bool now_selected = mask >> j & 1;
        const Value sign = now_selected ? 1 : -1;
        cost += sign * (budget ? budget->costs[j] : 1);
        for (int i = 0; i < inst.agent_count; ++i) {
          utils[i] += sign * inst.value(i, j);
        }
      }
    }
    if (cost <= limit) fn(mask, static_cast<const std::vector<Value>&>(utils), cost);
  }
}

inline std::vector<int> mask_to_goods(std::uint64_t mask, int good_count) {
  std::vector<int> goods;
  for (int j = 0; j < good_count; ++j) {
    if (mask >> j & 1) goods.push_back(j);
  }
  return goods;
}

}  // namespace fairalloc::detail
