#pragma once

#include <compare>
#include <vector>

#include "fairalloc/instance.hpp"

namespace fairalloc {

// ---------------------------------------------------------------------------
// Nash welfare with the zero-utility tie-break: score (c, p) where c is the
// number of agents with positive utility and p is the exact product of those
// positive utilities.  Scores compare lexicographically — first serve as many
// agents as possible, then maximize the product over the served ones.  The
// empty product is 1, so the all-zero score is (0, 1).
//
// The geometric-mean normalization (the c-th root) is monotone for a fixed
// agent count, so comparisons stay in integer-product space and no root is
// ever computed.
// ---------------------------------------------------------------------------
struct NashScore {
  int positive_count = 0;
  BigInt product = 1;

  friend bool operator==(const NashScore&, const NashScore&) = default;
};

bool operator<(const NashScore& a, const NashScore& b);
inline bool operator>(const NashScore& a, const NashScore& b) { return b < a; }
inline bool operator<=(const NashScore& a, const NashScore& b) { return !(b < a); }
inline bool operator>=(const NashScore& a, const NashScore& b) { return !(a < b); }

// A utility profile with its sorted (non-decreasing) view, the object leximin
// comparisons are defined on.
struct UtilityVector {
  std::vector<Value> raw;
  std::vector<Value> sorted;

  static UtilityVector of(std::vector<Value> raw);

  friend bool operator==(const UtilityVector&, const UtilityVector&) = default;
};

// Lexicographic comparison of the sorted views: raise the worst-off utility
// first, then the second-worst, and so on.  Requires equal lengths.
std::strong_ordering leximin_compare(const UtilityVector& a, const UtilityVector& b);
std::strong_ordering leximin_compare(std::vector<Value> a, std::vector<Value> b);

// ---------------------------------------------------------------------------
// Utilities under each model.  Additive: an agent's utility is the sum of its
// values over the goods it consumes (everything selected for public goods,
// its own bundle for private goods, the chosen alternative per issue for
// decisions).  All entry points validate feasibility and index ranges.
// ---------------------------------------------------------------------------
Value utility(const PublicGoodsInstance& inst, const PublicSelection& x, int agent);
Value utility(const PrivateGoodsInstance& inst, const PrivatePartition& x, int agent);
Value utility(const PublicDecisionsInstance& inst, const DecisionVector& x, int agent);

std::vector<Value> utilities(const PublicGoodsInstance& inst, const PublicSelection& x);
std::vector<Value> utilities(const PrivateGoodsInstance& inst, const PrivatePartition& x);
std::vector<Value> utilities(const PublicDecisionsInstance& inst, const DecisionVector& x);

NashScore nash_score_of(const std::vector<Value>& utilities);

NashScore nash_score(const PublicGoodsInstance& inst, const PublicSelection& x);
NashScore nash_score(const PrivateGoodsInstance& inst, const PrivatePartition& x);
NashScore nash_score(const PublicDecisionsInstance& inst, const DecisionVector& x);

}  // namespace fairalloc
