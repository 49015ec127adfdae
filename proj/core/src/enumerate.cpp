#include "fairalloc/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "fairalloc/errors.hpp"

namespace fairalloc {

SolveLimits SolveLimits::from_env() {
  SolveLimits limits;
  if (const char* raw = std::getenv("FAIRALLOC_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && parsed > 0) {
      limits.max_states = parsed;
    } else {
      throw ValidationError("FAIRALLOC_MAX_ENUM: expected a positive integer, got \"" +
                            std::string(raw) + "\"");
    }
  }
  return limits;
}

FeasibleEnumerator::FeasibleEnumerator(const PublicGoodsInstance& inst) : inst_(&inst) {
  inst.validate(Strictness::relaxed);
  if (inst.good_count > 62) {
    throw ScaleRefusal("subset enumeration over " + std::to_string(inst.good_count) +
                           " goods exceeds the 62-bit counter (2^" +
                           std::to_string(inst.good_count) + " states)",
                       to_decimal(ipow(2, static_cast<unsigned long>(inst.good_count))));
  }
  end_ = std::uint64_t{1} << inst.good_count;
}

std::optional<PublicSelection> FeasibleEnumerator::next() {
  const auto* budget = inst_->budget();
  const int k = budget ? inst_->good_count : inst_->cardinality_k();
  while (counter_ < end_) {
    const std::uint64_t mask = counter_++;
    PublicSelection x;
    Value cost = 0;
    for (int j = 0; j < inst_->good_count; ++j) {
      if (mask >> j & 1) {
        x.goods.push_back(j);
        cost += budget ? budget->costs[j] : 1;
      }
    }
    const bool feasible =
        budget ? cost <= budget->limit : static_cast<int>(x.goods.size()) <= k;
    if (feasible) return x;
  }
  return std::nullopt;
}

void for_each_feasible(const PublicGoodsInstance& inst,
                       const std::function<void(const PublicSelection&)>& fn) {
  FeasibleEnumerator stream(inst);
  while (auto x = stream.next()) fn(*x);
}

BigInt count_feasible(const PublicGoodsInstance& inst) {
  BigInt count = 0;
  for_each_feasible(inst, [&](const PublicSelection&) { ++count; });
  return count;
}

}  // namespace fairalloc
