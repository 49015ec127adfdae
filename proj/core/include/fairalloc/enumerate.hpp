#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fairalloc/instance.hpp"

namespace fairalloc {

// State budget for the brute-force and dynamic-programming solvers.  The CLI
// seeds max_states from the FAIRALLOC_MAX_ENUM environment variable; library
// callers get the fixed default and the library itself never reads the
// environment.
struct SolveLimits {
  static constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 22;

  std::uint64_t max_states = kDefaultMaxStates;

  // Default limits with max_states overridden by FAIRALLOC_MAX_ENUM when the
  // variable is set to a positive integer.
  static SolveLimits from_env();
};

// Streams every feasible selection in increasing characteristic-vector order:
// subsets are visited as binary counters where good j is bit j, so the order
// for m = 3 under k = 1 is {}, {0}, {1}, {2}.  "Lexicographically first among
// ties" always means first in this stream, and a selection's tie-break rank is
// its counter value.  Restartable; the caller accepts the exponential cost.
class FeasibleEnumerator {
 public:
  // Validates the instance; throws ScaleRefusal when good_count > 62 (the
  // counter must fit a 64-bit mask).
  explicit FeasibleEnumerator(const PublicGoodsInstance& inst);

  // Next feasible selection, or nullopt when the stream is exhausted.
  std::optional<PublicSelection> next();
  void reset() { counter_ = 0; }

  // The counter value of the selection most recently returned by next().
  std::uint64_t last_rank() const { return counter_ - 1; }

 private:
  const PublicGoodsInstance* inst_;
  std::uint64_t counter_ = 0;
  std::uint64_t end_ = 0;
};

// Convenience wrapper over a full enumeration pass.
void for_each_feasible(const PublicGoodsInstance& inst,
                       const std::function<void(const PublicSelection&)>& fn);

BigInt count_feasible(const PublicGoodsInstance& inst);

}  // namespace fairalloc
