#include <doctest.h>

#include <vector>

#include "fairalloc/errors.hpp"
#include "fairalloc/reductions.hpp"
#include "fairalloc/solvers.hpp"
#include "helpers.hpp"

using namespace fairalloc;
using testutil::make_public;
using testutil::Rng;

namespace {

PrivateGoodsInstance random_private(Rng& rng, int n, int m, Value max_value) {
  PrivateGoodsInstance inst;
  inst.agent_count = n;
  inst.good_count = m;
  inst.valuations.assign(n, std::vector<Value>(m, 0));
  for (int i = 0; i < n; ++i) {
    bool any = false;
    for (int j = 0; j < m; ++j) {
      inst.valuations[i][j] = rng.pick(0, max_value);
      any = any || inst.valuations[i][j] > 0;
    }
    if (!any) inst.valuations[i][static_cast<int>(rng.pick(0, m - 1))] = 1;
  }
  return inst;
}

}  // namespace

TEST_CASE("selection-to-decisions construction adds balanced voter blocks") {
  auto inst = make_public(2, 3, 2, {{2, 1, 0}, {0, 1, 2}});
  // Block size: ceil(log2((m*V)^(2mn))) = ceil(12 * log2(6)) = 32.
  CHECK(decision_blowup(inst) == 32);

  const auto artifact = public_to_decision_mnw(inst);
  CHECK(artifact.kind == ReductionKind::public_to_decisions_mnw);
  CHECK(artifact.agent_blowup == 32);
  const auto& target = std::get<PublicDecisionsInstance>(artifact.target);
  CHECK(target.agent_count == 2 + 3 * 32);
  REQUIRE(target.issue_count() == 3);

  for (int j = 0; j < 3; ++j) {
    const auto& issue = target.issues[j];
    CHECK(issue.alternatives == 2);
    // Originals keep their valuations on the "select" alternative.
    CHECK(issue.values[0][0] == inst.valuations[0][j]);
    CHECK(issue.values[1][0] == inst.valuations[1][j]);
    CHECK(issue.values[0][1] == 0);
    // Voter blocks: k*T agents prefer "select", (m-k)*T prefer "reject".
    int select_voters = 0;
    int reject_voters = 0;
    for (int i = 2; i < target.agent_count; ++i) {
      if (issue.values[i][0] == 1) ++select_voters;
      if (issue.values[i][1] == 1) ++reject_voters;
    }
    CHECK(select_voters == 2 * 32);
    CHECK(reject_voters == 1 * 32);
  }
}

TEST_CASE("selection-to-decisions constructions require k >= n") {
  auto inst = make_public(3, 4, 2, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  CHECK_THROWS_AS(public_to_decision_mnw(inst), UnsupportedError);
  CHECK_THROWS_AS(public_to_decision_lex(inst), UnsupportedError);

  auto budget = testutil::make_budget(1, 2, 3, {1, 2}, {{1, 1}});
  CHECK_THROWS_AS(public_to_decision_mnw(budget), UnsupportedError);
}

TEST_CASE("product-objective decision roundtrips preserve the optimum") {
  Rng rng(404);
  int checked = 0;
  while (checked < 40) {
    const int n = static_cast<int>(rng.pick(1, 2));
    const int m = static_cast<int>(rng.pick(n, 4));
    const int k = static_cast<int>(rng.pick(n, m));
    auto inst = testutil::random_public(rng, n, m, k, 2);

    const auto artifact = public_to_decision_mnw(inst);
    const auto report = verify_roundtrip(artifact);
    CHECK(report.match);
    CHECK(report.feasible);
    CHECK(report.ones_decided == k);
    CHECK(report.back_mapped_score == report.source_optimum.score);
    ++checked;
  }
}

TEST_CASE("undersized voter blocks break the decisions construction") {
  // With no voters at all, deciding every issue to "select" dominates, which
  // back-maps to an infeasible 2-good selection under k = 1.
  auto inst = make_public(1, 2, 1, {{1, 1}});
  const auto artifact = public_to_decision_mnw_with_blowup(inst, 0);
  CHECK(artifact.agent_blowup == 0);
  const auto report = verify_roundtrip(artifact);
  CHECK_FALSE(report.feasible);
  CHECK_FALSE(report.match);
  CHECK(report.ones_decided == 2);
}

TEST_CASE("sorted-objective decision construction scales originals and adds watchers") {
  auto inst = make_public(2, 4, 2, {{2, 1, 0, 1}, {0, 1, 2, 1}});
  const auto artifact = public_to_decision_lex(inst);
  CHECK(artifact.kind == ReductionKind::public_to_decisions_leximin);
  CHECK(artifact.value_scale == 17);  // m^2 + 1
  CHECK_FALSE(artifact.identity);

  const auto& target = std::get<PublicDecisionsInstance>(artifact.target);
  REQUIRE(target.agent_count == 4);  // originals + select watcher + reject watcher
  for (int j = 0; j < 4; ++j) {
    const auto& issue = target.issues[j];
    CHECK(issue.values[0][0] == 17 * inst.valuations[0][j]);
    CHECK(issue.values[1][0] == 17 * inst.valuations[1][j]);
    CHECK(issue.values[2][0] == 2);  // select watcher: m - k per selected issue
    CHECK(issue.values[2][1] == 0);
    CHECK(issue.values[3][0] == 0);
    CHECK(issue.values[3][1] == 2);  // reject watcher: k per rejected issue
  }
}

TEST_CASE("full-selection instances embed identically into decisions") {
  auto inst = make_public(2, 3, 3, {{2, 1, 0}, {0, 1, 2}});
  const auto artifact = public_to_decision_lex(inst);
  CHECK(artifact.identity);
  CHECK(artifact.value_scale == 1);
  const auto& target = std::get<PublicDecisionsInstance>(artifact.target);
  CHECK(target.agent_count == 2);

  const auto report = verify_roundtrip(artifact);
  CHECK(report.match);
  CHECK(report.ones_decided == 3);
}

TEST_CASE("sorted-objective decision roundtrips preserve the optimum") {
  Rng rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.pick(1, 3));
    const int m = static_cast<int>(rng.pick(n, 5));
    const int k = static_cast<int>(rng.pick(n, m));
    auto inst = testutil::random_public(rng, n, m, k, 3);

    const auto artifact = public_to_decision_lex(inst);
    const auto report = verify_roundtrip(artifact);
    CHECK(report.match);
    CHECK(report.feasible);
    CHECK(report.ones_decided == k);
    CHECK(report.back_mapped_utilities.sorted == report.source_optimum.utilities.sorted);
  }
}

TEST_CASE("partition-to-selection construction copies goods per owner") {
  PrivateGoodsInstance inst;
  inst.agent_count = 2;
  inst.good_count = 3;
  inst.valuations = {{2, 1, 0}, {1, 1, 3}};

  const auto artifact = private_to_public_mnw(inst);
  const auto& target = std::get<PublicGoodsInstance>(artifact.target);
  CHECK(target.agent_count == 2 + 2 * 3);  // originals + a dummy pair per good
  CHECK(target.good_count == 2 * 3);       // one copy per (good, owner)
  CHECK(target.cardinality_k() == 3);

  // Copy (good j, owner i) sits at index j*n + i and only i values it.
  CHECK(target.valuations[0][0 * 2 + 0] == 2);
  CHECK(target.valuations[0][0 * 2 + 1] == 0);
  CHECK(target.valuations[1][0 * 2 + 1] == 1);
  CHECK(target.valuations[1][2 * 2 + 1] == 3);
  CHECK(target.valuations[0][2 * 2 + 0] == 0);  // owner values its zero copy at zero

  // The dummy pair for good j values every copy of j at 1.
  for (int j = 0; j < 3; ++j) {
    for (int d = 0; d < 2; ++d) {
      const auto& row = target.valuations[2 + 2 * j + d];
      for (int g = 0; g < 6; ++g) CHECK(row[g] == (g / 2 == j ? 1 : 0));
    }
  }
}

TEST_CASE("partition roundtrips preserve the optimum for both objectives") {
  Rng rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.pick(1, 3));
    const int m = static_cast<int>(rng.pick(1, 5));
    auto inst = random_private(rng, n, m, 3);

    for (const bool product : {true, false}) {
      const auto artifact = product ? private_to_public_mnw(inst) : private_to_public_lex(inst);
      const auto report = verify_roundtrip(artifact);
      CHECK(report.match);
      CHECK(report.feasible);
      CHECK(report.ones_decided == -1);
      if (product) {
        CHECK(report.back_mapped_score == report.source_optimum.score);
      } else {
        CHECK(report.back_mapped_utilities.sorted == report.source_optimum.utilities.sorted);
      }
    }
  }
}

TEST_CASE("back-mapping handles stray and missing copies") {
  PrivateGoodsInstance inst;
  inst.agent_count = 2;
  inst.good_count = 2;
  inst.valuations = {{2, 1}, {1, 1}};
  const auto artifact = private_to_public_mnw(inst);

  // Good 0 assigned via agent 1's copy (index 0*2+1); good 1 unassigned and
  // defaulting to agent 0.
  const auto mapped = back_map(artifact, PublicSelection{{1}});
  const auto& partition = std::get<PrivatePartition>(mapped);
  REQUIRE(partition.bundles.size() == 2);
  CHECK(partition.bundles[0] == std::vector<int>{1});
  CHECK(partition.bundles[1] == std::vector<int>{0});

  // A decisions-target artifact maps the "select" alternative to the goods.
  auto pub = make_public(2, 3, 2, {{2, 1, 0}, {0, 1, 2}});
  const auto dec_artifact = public_to_decision_lex(pub);
  const auto sel = back_map(dec_artifact, DecisionVector{{0, 1, 0}});
  CHECK(std::get<PublicSelection>(sel).goods == std::vector<int>{0, 2});
}
