#pragma once

#include <cstdint>
#include <vector>

#include "fairalloc/hardness.hpp"
#include "fairalloc/instance.hpp"

namespace fairalloc {

// ---------------------------------------------------------------------------
// Deterministic, splittable random generation.  Every drawn quantity has a
// fixed counter, so instances regenerate bit-exactly from (seed, shape)
// alone and draws never depend on evaluation order:
//
//   raw(c)      = splitmix64 finalizer applied to seed + (c+1) * 2^64/phi
//   below(c, b) = floor(raw(c) * b / 2^64)   (Lemire multiply-shift)
//
// Counter layouts per generator are documented at each function and in the
// README so outputs can be reproduced independently.
// ---------------------------------------------------------------------------
struct CounterRng {
  std::uint64_t seed = 0;

  std::uint64_t raw(std::uint64_t counter) const;
  // Uniform-ish value in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const;
};

// Entry distribution for valuation tables.
struct ValueSpec {
  bool binary = true;  // entries in {0, 1}
  Value max = 1;       // otherwise uniform integers in [0, max]

  static ValueSpec make_binary() { return {true, 1}; }
  static ValueSpec uniform(Value max) { return {false, max}; }
};

// Counters: value v[i][j] at i*m + j; zero-row fixes at n*m + i (choosing the
// column forced to 1 for agent i when its row drew all zeros).
PublicGoodsInstance gen_public_cardinality(std::uint64_t seed, int n, int m, int k,
                                           const ValueSpec& values);

// Counters: values as above; cost[j] in [1, max_cost] at n*m + n + j; the
// budget is the caller's.
PublicGoodsInstance gen_public_budget(std::uint64_t seed, int n, int m, Value budget,
                                      Value max_cost, const ValueSpec& values);

// Same counter layout as gen_public_cardinality (no constraint to draw).
PrivateGoodsInstance gen_private(std::uint64_t seed, int n, int m, const ValueSpec& values);

// Every issue gets `alternatives` alternatives; value v[i][j][a] at
// (j*n + i) * alternatives + a.
PublicDecisionsInstance gen_decisions(std::uint64_t seed, int n, int m, int alternatives,
                                      const ValueSpec& values);

// ---------------------------------------------------------------------------
// Random gadget sources.  Each returns the *source* decision-problem
// instance; feed it to the matching from_* constructor.  YES and NO draws
// both occur with fair probability at the default shapes (asserted by the
// gadget test suites).
// ---------------------------------------------------------------------------

// family_size subsets of [0, universe_size); set s draws element e at counter
// s*universe_size + e (membership with probability 1/2).  Patched
// deterministically so every element is covered and no set is empty: element
// e missing everywhere joins set below(10^6 + e, family_size); empty set s
// receives element below(2*10^6 + s, universe_size).
std::vector<std::vector<int>> gen_set_cover_family(std::uint64_t seed, int universe_size,
                                                   int family_size);

// family_size subsets of [0, element_count), each of exact size set_size,
// drawn by rejection-free partial shuffle: set s swaps position p using
// counter s*element_count + p.
std::vector<std::vector<int>> gen_regular_family(std::uint64_t seed, int element_count,
                                                 int family_size, int set_size);

// `count` values in [1, max_value] (counter = index), with a_0 bumped by 1
// when the sum lands odd (the partition gadget needs an even sum).
std::vector<Value> gen_even_sum_values(std::uint64_t seed, int count, Value max_value);

// clause_count positive clauses over variable_count variables; clause c
// includes variable v at counter c*variable_count + v with probability 1/2;
// empty clauses get variable below(10^6 + c, variable_count).
std::vector<std::vector<int>> gen_monotone_clauses(std::uint64_t seed, int variable_count,
                                                   int clause_count);

}  // namespace fairalloc
