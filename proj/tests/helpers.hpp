// Shared test utilities: instance builders, independent brute-force oracles
// (written as plain nested loops, deliberately not reusing the library's
// enumeration machinery), and a helper for driving the installed CLI binary.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fairalloc/arith.hpp"
#include "fairalloc/instance.hpp"

namespace testutil {

using fairalloc::BigInt;
using fairalloc::Budget;
using fairalloc::Cardinality;
using fairalloc::PrivateGoodsInstance;
using fairalloc::PublicDecisionsInstance;
using fairalloc::PublicGoodsInstance;
using fairalloc::PublicSelection;
using fairalloc::Value;

// ---------------------------------------------------------------------------
// Deterministic randomness for test-case generation.  mt19937_64 output is
// pinned by the standard, so fixed seeds give identical suites everywhere.
// ---------------------------------------------------------------------------
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long long pick(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Instance builders.
// ---------------------------------------------------------------------------
inline PublicGoodsInstance make_public(int n, int m, int k,
                                       std::vector<std::vector<Value>> values) {
  PublicGoodsInstance inst;
  inst.agent_count = n;
  inst.good_count = m;
  inst.constraint = Cardinality{k};
  inst.valuations = std::move(values);
  return inst;
}

inline PublicGoodsInstance make_budget(int n, int m, Value limit, std::vector<Value> costs,
                                       std::vector<std::vector<Value>> values) {
  PublicGoodsInstance inst;
  inst.agent_count = n;
  inst.good_count = m;
  inst.constraint = Budget{limit, std::move(costs)};
  inst.valuations = std::move(values);
  return inst;
}

// Random public-goods instance with every agent valuing some good positively.
inline PublicGoodsInstance random_public(Rng& rng, int n, int m, int k, Value max_value) {
  std::vector<std::vector<Value>> values(n, std::vector<Value>(m, 0));
  for (int i = 0; i < n; ++i) {
    bool any = false;
    for (int j = 0; j < m; ++j) {
      values[i][j] = rng.pick(0, max_value);
      any = any || values[i][j] > 0;
    }
    if (!any) values[i][static_cast<int>(rng.pick(0, m - 1))] = 1;
  }
  return make_public(n, m, k, std::move(values));
}

// ---------------------------------------------------------------------------
// Independent oracles over public-goods instances.  Utilities are recomputed
// from scratch per subset; feasibility is popcount / summed cost.
// ---------------------------------------------------------------------------
inline bool mask_feasible(const PublicGoodsInstance& inst, unsigned long mask) {
  if (const auto* card = std::get_if<Cardinality>(&inst.constraint)) {
    return __builtin_popcountl(mask) <= card->k;
  }
  const auto& budget = std::get<Budget>(inst.constraint);
  Value cost = 0;
  for (int j = 0; j < inst.good_count; ++j) {
    if (mask >> j & 1u) cost += budget.costs[j];
  }
  return cost <= budget.limit;
}

inline std::vector<Value> mask_utilities(const PublicGoodsInstance& inst, unsigned long mask) {
  std::vector<Value> utils(inst.agent_count, 0);
  for (int i = 0; i < inst.agent_count; ++i) {
    for (int j = 0; j < inst.good_count; ++j) {
      if (mask >> j & 1u) utils[i] += inst.valuations[i][j];
    }
  }
  return utils;
}

inline PublicSelection mask_selection(unsigned long mask, int m) {
  PublicSelection x;
  for (int j = 0; j < m; ++j) {
    if (mask >> j & 1u) x.goods.push_back(j);
  }
  return x;
}

struct NashOracle {
  int positive_count = 0;
  BigInt product = 1;
};

// Best (positive-count, product-over-positives) over all feasible subsets.
inline NashOracle oracle_mnw(const PublicGoodsInstance& inst) {
  NashOracle best;
  bool first = true;
  for (unsigned long mask = 0; mask < (1ul << inst.good_count); ++mask) {
    if (!mask_feasible(inst, mask)) continue;
    const auto utils = mask_utilities(inst, mask);
    NashOracle cur;
    for (Value u : utils) {
      if (u > 0) {
        ++cur.positive_count;
        cur.product *= u;
      }
    }
    if (first || cur.positive_count > best.positive_count ||
        (cur.positive_count == best.positive_count && cur.product > best.product)) {
      best = cur;
      first = false;
    }
  }
  return best;
}

// Lexicographically best sorted (non-decreasing) utility vector.
inline std::vector<Value> oracle_leximin(const PublicGoodsInstance& inst) {
  std::vector<Value> best;
  for (unsigned long mask = 0; mask < (1ul << inst.good_count); ++mask) {
    if (!mask_feasible(inst, mask)) continue;
    auto utils = mask_utilities(inst, mask);
    std::sort(utils.begin(), utils.end());
    if (best.empty() || std::lexicographical_compare(best.begin(), best.end(), utils.begin(),
                                                     utils.end())) {
      best = utils;
    }
  }
  return best;
}

// Max over feasible subsets of the minimum utility.
inline Value oracle_maxmin(const PublicGoodsInstance& inst) {
  Value best = -1;
  for (unsigned long mask = 0; mask < (1ul << inst.good_count); ++mask) {
    if (!mask_feasible(inst, mask)) continue;
    const auto utils = mask_utilities(inst, mask);
    best = std::max(best, *std::min_element(utils.begin(), utils.end()));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Independent oracles for the classical source problems behind the gadgets.
// Sets/clauses hold 0-based element indices.
// ---------------------------------------------------------------------------
inline bool oracle_set_cover(int universe, const std::vector<std::vector<int>>& family,
                             int cover_size) {
  const int s = static_cast<int>(family.size());
  for (unsigned long pick = 0; pick < (1ul << s); ++pick) {
    if (__builtin_popcountl(pick) > cover_size) continue;
    std::vector<bool> covered(universe, false);
    for (int f = 0; f < s; ++f) {
      if (!(pick >> f & 1u)) continue;
      for (int e : family[f]) covered[e] = true;
    }
    if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return true;
  }
  return false;
}

inline bool oracle_set_packing(const std::vector<std::vector<int>>& family, int packing_size) {
  const int s = static_cast<int>(family.size());
  for (unsigned long pick = 0; pick < (1ul << s); ++pick) {
    if (__builtin_popcountl(pick) != packing_size) continue;
    std::vector<int> seen;
    bool disjoint = true;
    for (int f = 0; f < s && disjoint; ++f) {
      if (!(pick >> f & 1u)) continue;
      for (int e : family[f]) {
        if (std::find(seen.begin(), seen.end(), e) != seen.end()) {
          disjoint = false;
          break;
        }
        seen.push_back(e);
      }
    }
    if (disjoint) return true;
  }
  return false;
}

// Split into two equal-size halves of equal sum (padded multiset).
inline bool oracle_equal_split(const std::vector<Value>& values) {
  const int m = static_cast<int>(values.size());
  const Value total = std::accumulate(values.begin(), values.end(), Value{0});
  if (m % 2 != 0 || total % 2 != 0) return false;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    if (__builtin_popcountl(mask) != m / 2) continue;
    Value sum = 0;
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1u) sum += values[j];
    }
    if (2 * sum == total) return true;
  }
  return false;
}

// Monotone clauses; satisfiable with at most `budget` variables set true?
inline bool oracle_monotone_sat(int variables, const std::vector<std::vector<int>>& clauses,
                                int budget) {
  for (unsigned long assign = 0; assign < (1ul << variables); ++assign) {
    if (__builtin_popcountl(assign) > budget) continue;
    bool ok = true;
    for (const auto& clause : clauses) {
      bool sat = false;
      for (int v : clause) {
        if (assign >> v & 1u) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// CLI driver.  The test harness exports FAIRALLOC_CLI with the binary path.
// ---------------------------------------------------------------------------
struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string cli_binary() {
  const char* path = std::getenv("FAIRALLOC_CLI");
  return path ? path : "";
}

inline std::string temp_path(const std::string& tag) {
  static int counter = 0;
  return "fairalloc_test_" + tag + "_" + std::to_string(counter++) + ".tmp";
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Runs `fairalloc <args>` with optional extra environment assignments
// (e.g. "FAIRALLOC_MAX_ENUM=100"), capturing stdout/stderr and the exit code.
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  CliResult result;
  const std::string binary = cli_binary();
  if (binary.empty()) return result;
  const std::string out_path = temp_path("stdout");
  const std::string err_path = temp_path("stderr");
  std::string command;
  if (!env.empty()) command += "env " + env + " ";
  command += "'" + binary + "' " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(command.c_str());
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace testutil
