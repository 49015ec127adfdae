#include "fairalloc/gen.hpp"

#include <algorithm>
#include <numeric>

#include "fairalloc/errors.hpp"

namespace fairalloc {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// Counter regions, documented in the README: values occupy [0, n*m), the
// zero-row patch draws sit at n*m + i, budget costs at n*m + n + j, and the
// family/clause patch draws start at 10^6 and 2*10^6.
constexpr std::uint64_t kPatchRegionA = 1'000'000;
constexpr std::uint64_t kPatchRegionB = 2'000'000;

Value draw_value(const CounterRng& rng, std::uint64_t counter, const ValueSpec& spec) {
  if (spec.binary) return static_cast<Value>(rng.below(counter, 2));
  if (spec.max < 0) throw ValidationError("value spec: negative maximum");
  return static_cast<Value>(rng.below(counter, static_cast<std::uint64_t>(spec.max) + 1));
}

std::vector<std::vector<Value>> draw_table(const CounterRng& rng, int n, int m,
                                           const ValueSpec& spec, bool fix_zero_rows) {
  std::vector<std::vector<Value>> table(n, std::vector<Value>(m, 0));
  for (int i = 0; i < n; ++i) {
    bool any_positive = false;
    for (int j = 0; j < m; ++j) {
      table[i][j] = draw_value(rng, static_cast<std::uint64_t>(i) * m + j, spec);
      any_positive = any_positive || table[i][j] > 0;
    }
    if (fix_zero_rows && !any_positive) {
      // Deterministic patch: the model requires every agent to value some
      // good, so an all-zero row gets a 1 at a drawn column.
      const auto column = rng.below(static_cast<std::uint64_t>(n) * m + i,
                                    static_cast<std::uint64_t>(m));
      table[i][static_cast<int>(column)] = 1;
    }
  }
  return table;
}

}  // namespace

std::uint64_t CounterRng::raw(std::uint64_t counter) const {
  std::uint64_t z = seed + (counter + 1) * kGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::below(std::uint64_t counter, std::uint64_t bound) const {
  if (bound == 0) throw ValidationError("CounterRng::below: bound must be positive");
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(raw(counter)) * bound) >> 64);
}

PublicGoodsInstance gen_public_cardinality(std::uint64_t seed, int n, int m, int k,
                                           const ValueSpec& values) {
  CounterRng rng{seed};
  PublicGoodsInstance inst;
  inst.agent_count = n;
  inst.good_count = m;
  inst.constraint = Cardinality{k};
  inst.valuations = draw_table(rng, n, m, values, /*fix_zero_rows=*/true);
  inst.validate();
  return inst;
}

PublicGoodsInstance gen_public_budget(std::uint64_t seed, int n, int m, Value budget,
                                      Value max_cost, const ValueSpec& values) {
  if (max_cost < 1) throw ValidationError("max_cost: must be positive");
  CounterRng rng{seed};
  PublicGoodsInstance inst;
  inst.agent_count = n;
  inst.good_count = m;
  Budget b;
  b.limit = budget;
  b.costs.resize(m);
  for (int j = 0; j < m; ++j) {
    b.costs[j] = 1 + static_cast<Value>(rng.below(
                         static_cast<std::uint64_t>(n) * m + n + j,
                         static_cast<std::uint64_t>(max_cost)));
  }
  inst.constraint = std::move(b);
  inst.valuations = draw_table(rng, n, m, values, /*fix_zero_rows=*/true);
  inst.validate();
  return inst;
}

PrivateGoodsInstance gen_private(std::uint64_t seed, int n, int m, const ValueSpec& values) {
  CounterRng rng{seed};
  PrivateGoodsInstance inst;
  inst.agent_count = n;
  inst.good_count = m;
  inst.valuations = draw_table(rng, n, m, values, /*fix_zero_rows=*/true);
  inst.validate();
  return inst;
}

PublicDecisionsInstance gen_decisions(std::uint64_t seed, int n, int m, int alternatives,
                                      const ValueSpec& values) {
  if (alternatives < 2) throw ValidationError("alternatives: need at least 2");
  CounterRng rng{seed};
  PublicDecisionsInstance inst;
  inst.agent_count = n;
  inst.issues.resize(m);
  for (int j = 0; j < m; ++j) {
    DecisionIssue& issue = inst.issues[j];
    issue.alternatives = alternatives;
    issue.values.assign(n, std::vector<Value>(alternatives, 0));
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < alternatives; ++a) {
        const std::uint64_t counter =
            (static_cast<std::uint64_t>(j) * n + i) * alternatives + a;
        issue.values[i][a] = draw_value(rng, counter, values);
      }
    }
  }
  inst.validate();
  return inst;
}

std::vector<std::vector<int>> gen_set_cover_family(std::uint64_t seed, int universe_size,
                                                   int family_size) {
  if (universe_size < 1 || family_size < 1) {
    throw ValidationError("set cover family: need a positive universe and family size");
  }
  CounterRng rng{seed};
  std::vector<std::vector<int>> family(family_size);
  std::vector<char> covered(universe_size, 0);
  for (int s = 0; s < family_size; ++s) {
    for (int e = 0; e < universe_size; ++e) {
      if (rng.raw(static_cast<std::uint64_t>(s) * universe_size + e) & 1) {
        family[s].push_back(e);
        covered[e] = 1;
      }
    }
  }
  for (int e = 0; e < universe_size; ++e) {
    if (!covered[e]) {
      const int s = static_cast<int>(rng.below(kPatchRegionA + e,
                                               static_cast<std::uint64_t>(family_size)));
      family[s].push_back(e);
    }
  }
  for (int s = 0; s < family_size; ++s) {
    if (family[s].empty()) {
      family[s].push_back(static_cast<int>(
          rng.below(kPatchRegionB + s, static_cast<std::uint64_t>(universe_size))));
    }
    std::sort(family[s].begin(), family[s].end());
  }
  return family;
}

std::vector<std::vector<int>> gen_regular_family(std::uint64_t seed, int element_count,
                                                 int family_size, int set_size) {
  if (element_count < 1 || family_size < 1) {
    throw ValidationError("regular family: need a positive element and family count");
  }
  if (set_size < 1 || set_size > element_count) {
    throw ValidationError("regular family: set size must lie in [1, element count]");
  }
  CounterRng rng{seed};
  std::vector<std::vector<int>> family(family_size);
  for (int s = 0; s < family_size; ++s) {
    // Partial Fisher-Yates: after p swaps the prefix holds a uniform draw of
    // p+1 distinct elements.
    std::vector<int> pool(element_count);
    std::iota(pool.begin(), pool.end(), 0);
    for (int p = 0; p < set_size; ++p) {
      const auto offset = rng.below(static_cast<std::uint64_t>(s) * element_count + p,
                                    static_cast<std::uint64_t>(element_count - p));
      std::swap(pool[p], pool[p + static_cast<int>(offset)]);
    }
    family[s].assign(pool.begin(), pool.begin() + set_size);
    std::sort(family[s].begin(), family[s].end());
  }
  return family;
}

std::vector<Value> gen_even_sum_values(std::uint64_t seed, int count, Value max_value) {
  if (count < 1) throw ValidationError("even-sum values: need a positive count");
  if (max_value < 1) throw ValidationError("even-sum values: need a positive maximum");
  CounterRng rng{seed};
  std::vector<Value> values(count);
  Value sum = 0;
  for (int i = 0; i < count; ++i) {
    values[i] = 1 + static_cast<Value>(rng.below(i, static_cast<std::uint64_t>(max_value)));
    sum += values[i];
  }
  // The partition gadget needs an even sum; bump the first entry on odd draws
  // (it may then exceed max_value by one).
  if (sum % 2 != 0) values[0] += 1;
  return values;
}

std::vector<std::vector<int>> gen_monotone_clauses(std::uint64_t seed, int variable_count,
                                                   int clause_count) {
  if (variable_count < 1 || clause_count < 1) {
    throw ValidationError("clauses: need a positive variable and clause count");
  }
  CounterRng rng{seed};
  std::vector<std::vector<int>> clauses(clause_count);
  for (int c = 0; c < clause_count; ++c) {
    for (int v = 0; v < variable_count; ++v) {
      if (rng.raw(static_cast<std::uint64_t>(c) * variable_count + v) & 1) {
        clauses[c].push_back(v);
      }
    }
    if (clauses[c].empty()) {
      clauses[c].push_back(static_cast<int>(
          rng.below(kPatchRegionA + c, static_cast<std::uint64_t>(variable_count))));
    }
  }
  return clauses;
}

}  // namespace fairalloc
