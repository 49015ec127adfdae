#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "fairalloc/errors.hpp"
#include "fairalloc/gen.hpp"
#include "fairalloc/hardness.hpp"
#include "helpers.hpp"

using namespace fairalloc;
using testutil::Rng;

namespace {

// Independent check of the balanced-product bound: maximize the product of n
// non-negative integers whose sum is at most n*lower + remainder.
BigInt oracle_max_product(int n, Value lower, Value remainder) {
  const Value total = n * lower + remainder;
  BigInt best = 0;
  std::function<void(int, Value, BigInt)> go = [&](int left, Value budget, BigInt product) {
    if (left == 0) {
      if (product > best) best = product;
      return;
    }
    for (Value u = 0; u <= budget; ++u) go(left - 1, budget - u, product * u);
  };
  go(n, total, 1);
  return best;
}

}  // namespace

TEST_CASE("balanced-product bound matches its brute force") {
  for (int n = 1; n <= 4; ++n) {
    for (Value lower = 1; lower <= 3; ++lower) {
      for (Value r = 0; r <= n; ++r) {
        CHECK(max_product_bounded_sum(n, lower, r) == oracle_max_product(n, lower, r));
      }
    }
  }
  CHECK(max_product_bounded_sum(4, 4, 4) == ipow(BigInt(5), 4));
  CHECK_THROWS_AS(max_product_bounded_sum(2, 1, 3), ValidationError);   // r > n
  CHECK_THROWS_AS(max_product_bounded_sum(2, 1, -1), ValidationError);  // r < 0
  CHECK_THROWS_AS(max_product_bounded_sum(2, 0, 1), ValidationError);   // lower < 1
}

TEST_CASE("cover gadget encodes element coverage as positive counts") {
  const std::vector<std::vector<int>> family = {{0, 1}, {1, 2}, {2, 3}};
  const auto gadget = from_set_cover(4, family, 2);
  CHECK(gadget.gadget == "setcover");
  CHECK(gadget.instance.agent_count == 4);
  CHECK(gadget.instance.good_count == 3);
  CHECK(gadget.instance.cardinality_k() == 2);
  CHECK(gadget.threshold.kind == GadgetThreshold::Kind::positive_count);
  CHECK(gadget.threshold.bound == 4);
  CHECK(gadget.instance.valuations[1] == std::vector<Value>{1, 1, 0});

  // {0,1} and {2,3} cover the universe with two sets.
  CHECK(gadget_verdict(gadget));
  // One set cannot.
  CHECK_FALSE(gadget_verdict(from_set_cover(4, family, 1)));
}

TEST_CASE("cover gadget requires every element to be coverable") {
  CHECK_THROWS_AS(from_set_cover(3, {{0, 1}}, 1), ValidationError);          // element 2 uncovered
  CHECK_THROWS_AS(from_set_cover(3, {{0, 1, 3}, {2}}, 1), ValidationError);  // out of range
  CHECK_THROWS_AS(from_set_cover(3, {{0, 0, 1}, {2}}, 1), ValidationError);  // duplicate member
  CHECK_THROWS_AS(from_set_cover(3, {{0, 1}, {2}}, 5), ValidationError);     // k > set count
}

TEST_CASE("cover gadget verdict agrees with the independent oracle") {
  Rng rng(711);
  int yes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int universe = static_cast<int>(rng.pick(2, 4));
    const int sets = static_cast<int>(rng.pick(1, 4));
    const auto family = gen_set_cover_family(rng.pick(0, 1u << 30), universe, sets);
    const int k = static_cast<int>(rng.pick(0, sets));
    const auto gadget = from_set_cover(universe, family, k);
    const bool expected = testutil::oracle_set_cover(universe, family, k);
    CHECK(gadget_verdict(gadget) == expected);
    yes += expected ? 1 : 0;
  }
  CHECK(yes > 0);
  CHECK(yes < 60);
}

TEST_CASE("packing gadget rewards disjoint set selections") {
  // Three 2-element sets over four elements, packing size two.
  const std::vector<std::vector<int>> family = {{0, 1}, {2, 3}, {0, 2}};
  const auto gadget = from_ersp(4, family, 2, 2);
  CHECK(gadget.instance.agent_count == 4);
  CHECK(gadget.instance.good_count == 3 + 4);  // sets plus universal goods
  CHECK(gadget.instance.cardinality_k() == 2 + 4);
  CHECK(gadget.threshold.kind == GadgetThreshold::Kind::nash_product);
  CHECK(gadget.threshold.bound == 625);  // 5^4 * 4^0
  // Sets {0,1} and {2,3} are disjoint, so the bound is achieved exactly.
  CHECK(gadget_verdict(gadget));

  // Pairwise-overlapping sets cannot form a 2-packing.
  const auto no = from_ersp(4, {{0, 1}, {1, 2}, {0, 2}}, 2, 2);
  CHECK_FALSE(gadget_verdict(no));

  // A single set is always a 1-packing.
  CHECK(gadget_verdict(from_ersp(4, {{1, 3}}, 2, 1)));
}

TEST_CASE("packing gadget validates family shape") {
  CHECK_THROWS_AS(from_ersp(4, {{0, 1, 2}}, 2, 1), ValidationError);  // wrong set size
  CHECK_THROWS_AS(from_ersp(4, {{0, 1}}, 2, 3), ValidationError);     // d*r > n
  CHECK_THROWS_AS(from_ersp(4, {{0, 4}}, 2, 1), ValidationError);     // out of range
}

TEST_CASE("packing gadget verdict agrees with the independent oracle") {
  Rng rng(812);
  int yes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int elements = static_cast<int>(rng.pick(2, 4));
    const int d = static_cast<int>(rng.pick(1, 2));
    const int sets = static_cast<int>(rng.pick(1, 4));
    const int r = static_cast<int>(rng.pick(1, std::min<long long>(sets, 2)));
    if (d * r > elements) continue;
    const auto family = gen_regular_family(rng.pick(0, 1u << 30), elements, sets, d);
    const auto gadget = from_ersp(elements, family, d, r);
    const bool expected = testutil::oracle_set_packing(family, r);
    CHECK(gadget_verdict(gadget) == expected);
    yes += expected ? 1 : 0;
  }
  CHECK(yes > 0);
}

TEST_CASE("split gadget pads the multiset to a divisible size") {
  CHECK(eqsp_pad({1, 4, 4, 1}) == std::vector<Value>{1, 4, 4, 1});
  CHECK(eqsp_pad({1, 1, 2}) == std::vector<Value>{1, 1, 2, 0});
  CHECK(eqsp_pad({3, 5}) == std::vector<Value>{3, 5});
  // Sum 8 admits no divisible count below 8 once five entries are present.
  CHECK(eqsp_pad({1, 1, 2, 2, 2}) == std::vector<Value>{1, 1, 2, 2, 2, 0, 0, 0});

  CHECK_THROWS_AS(eqsp_pad({1, 1, 1}), ValidationError);   // odd sum
  CHECK_THROWS_AS(eqsp_pad({0, 0}), ValidationError);      // all-zero
  CHECK_THROWS_AS(eqsp_pad({-1, 3}), ValidationError);     // negative
}

TEST_CASE("split gadget encodes equal halves as a balanced product") {
  const auto gadget = from_eqsp({1, 4, 4, 1});
  CHECK(gadget.instance.agent_count == 2);
  CHECK(gadget.instance.good_count == 4);
  CHECK(gadget.instance.cardinality_k() == 2);
  // Row 0: a_j + R; row 1: C + R - a_j with R = 10, C = 5.
  CHECK(gadget.instance.valuations[0] == std::vector<Value>{11, 14, 14, 11});
  CHECK(gadget.instance.valuations[1] == std::vector<Value>{14, 11, 11, 14});
  CHECK(gadget.threshold.bound == 625);  // (R(1+m)/2)^2 = 25^2
  CHECK(gadget_verdict(gadget));

  // 3 + 5 cannot split into equal halves.
  CHECK_FALSE(gadget_verdict(from_eqsp({3, 5})));

  // The min-utility variant uses the unsquared bound.
  const auto maxmin = from_eqsp({1, 4, 4, 1}, GadgetObjective::maxmin);
  CHECK(maxmin.threshold.kind == GadgetThreshold::Kind::min_utility);
  CHECK(maxmin.threshold.bound == 25);
  CHECK(gadget_verdict(maxmin));

  CHECK_THROWS_AS(from_eqsp({1, 1}, GadgetObjective::leximin), ValidationError);
}

TEST_CASE("split gadget verdict agrees with the independent oracle") {
  Rng rng(913);
  int yes = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int count = static_cast<int>(rng.pick(3, 4));
    const auto values = gen_even_sum_values(rng.pick(0, 1u << 30), count, 4);
    const auto padded = eqsp_pad(values);
    const bool expected = testutil::oracle_equal_split(padded);
    CHECK(gadget_verdict(from_eqsp(values)) == expected);
    CHECK(gadget_verdict(from_eqsp(values, GadgetObjective::maxmin)) == expected);
    yes += expected ? 1 : 0;
  }
  CHECK(yes > 0);
  CHECK(yes < 40);
}

TEST_CASE("clause gadget encodes bounded satisfiability as a sorted prefix") {
  // Clauses {x0 or x1}, {x1 or x2}, {x2}; one true variable is not enough,
  // two are (x1, x2).
  const std::vector<std::vector<int>> clauses = {{0, 1}, {1, 2}, {2}};
  const auto no = from_monotone_sat(3, clauses, 1);
  CHECK(no.instance.agent_count == 4);       // clause agents + dummy agent
  CHECK(no.instance.good_count == 3 + 3);    // variables + (clauses - budget + 1) dummies
  CHECK(no.instance.cardinality_k() == 4);   // clauses + 1
  CHECK(no.threshold.kind == GadgetThreshold::Kind::sorted_lex);
  CHECK(no.threshold.sorted_bound == std::vector<Value>{3, 4, 4, 4});
  CHECK_FALSE(gadget_verdict(no));

  const auto yes = from_monotone_sat(3, clauses, 2);
  CHECK(yes.instance.good_count == 3 + 2);
  CHECK(yes.threshold.sorted_bound == std::vector<Value>{2, 3, 3, 3});
  CHECK(gadget_verdict(yes));
}

TEST_CASE("clause gadget validates its inputs") {
  CHECK_THROWS_AS(from_monotone_sat(2, {{0}, {}}, 1), ValidationError);   // empty clause
  CHECK_THROWS_AS(from_monotone_sat(2, {{0, 2}}, 1), ValidationError);    // variable range
  CHECK_THROWS_AS(from_monotone_sat(2, {{0}}, 3), ValidationError);       // budget > variables
  CHECK_THROWS_AS(from_monotone_sat(2, {}, 1), ValidationError);          // no clauses
}

TEST_CASE("clause gadget verdict agrees with the independent oracle") {
  Rng rng(1014);
  int yes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int variables = static_cast<int>(rng.pick(2, 4));
    const int clause_count = static_cast<int>(rng.pick(1, 4));
    const auto clauses = gen_monotone_clauses(rng.pick(0, 1u << 30), variables, clause_count);
    // The gadget needs at least one dummy good, i.e. budget <= clause count.
    const int budget = static_cast<int>(rng.pick(0, std::min(variables, clause_count)));
    const auto gadget = from_monotone_sat(variables, clauses, budget);
    const bool expected = testutil::oracle_monotone_sat(variables, clauses, budget);
    CHECK(gadget_verdict(gadget) == expected);
    yes += expected ? 1 : 0;
  }
  CHECK(yes > 0);
  CHECK(yes < 60);
}

TEST_CASE("generated gadget sources respect their shape contracts") {
  // Cover families cover the universe and contain no empty set.
  const auto family = gen_set_cover_family(42, 5, 3);
  REQUIRE(family.size() == 3);
  std::vector<bool> covered(5, false);
  for (const auto& set : family) {
    CHECK_FALSE(set.empty());
    for (int e : set) {
      REQUIRE(e >= 0);
      REQUIRE(e < 5);
      covered[e] = true;
    }
  }
  CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));

  // Regular families consist of distinct in-range elements of exact size.
  const auto regular = gen_regular_family(42, 6, 4, 3);
  REQUIRE(regular.size() == 4);
  for (const auto& set : regular) {
    REQUIRE(set.size() == 3);
    for (std::size_t a = 0; a < set.size(); ++a) {
      CHECK(set[a] >= 0);
      CHECK(set[a] < 6);
      for (std::size_t b = a + 1; b < set.size(); ++b) CHECK(set[a] != set[b]);
    }
  }

  // Even-sum value draws stay in range and sum to an even total.
  const auto values = gen_even_sum_values(42, 5, 4);
  REQUIRE(values.size() == 5);
  Value sum = 0;
  for (Value v : values) {
    CHECK(v >= 1);
    CHECK(v <= 5);  // the odd-sum patch may raise the first draw by one
    sum += v;
  }
  CHECK(sum % 2 == 0);

  // Monotone clauses are non-empty and in range.
  const auto clauses = gen_monotone_clauses(42, 4, 3);
  REQUIRE(clauses.size() == 3);
  for (const auto& clause : clauses) {
    CHECK_FALSE(clause.empty());
    for (int v : clause) {
      CHECK(v >= 0);
      CHECK(v < 4);
    }
  }
}

TEST_CASE("counter-based generation is reproducible and seed-sensitive") {
  const auto a = gen_public_cardinality(7, 3, 5, 2, ValueSpec::uniform(4));
  const auto b = gen_public_cardinality(7, 3, 5, 2, ValueSpec::uniform(4));
  const auto c = gen_public_cardinality(8, 3, 5, 2, ValueSpec::uniform(4));
  CHECK(a.valuations == b.valuations);
  CHECK(a.valuations != c.valuations);

  const CounterRng rng{7};
  CHECK(rng.raw(0) == CounterRng{7}.raw(0));
  CHECK(rng.below(0, 10) < 10);
}
