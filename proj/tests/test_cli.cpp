#include <doctest.h>

#include <json.hpp>
#include <string>

#include "fairalloc/hardness.hpp"
#include "fairalloc/io.hpp"
#include "helpers.hpp"

using nlohmann::json;
using testutil::run_cli;
using testutil::spit;
using testutil::temp_path;

namespace {

const std::string kGenPublic =
    "gen --model public-goods -n 2 -m 4 --k 2 --values uniform:3 --seed 7";

}  // namespace

TEST_CASE("cli binary is exported to the test environment") {
  REQUIRE_FALSE(testutil::cli_binary().empty());
}

TEST_CASE("generation is deterministic per seed and sensitive to it") {
  const auto first = run_cli(kGenPublic);
  const auto second = run_cli(kGenPublic);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());

  const auto other = run_cli(
      "gen --model public-goods -n 2 -m 4 --k 2 --values uniform:3 --seed 8");
  REQUIRE(other.exit_code == 0);
  CHECK(first.out != other.out);

  // Timing lands on stderr, never in the document.
  CHECK(first.err.find("timing_ms=") != std::string::npos);
  CHECK(first.out.find("timing_ms") == std::string::npos);
}

TEST_CASE("solve, audit, and reduce pipeline runs end to end") {
  const auto gen = run_cli(kGenPublic);
  REQUIRE(gen.exit_code == 0);
  const auto inst_path = temp_path("inst");
  spit(inst_path, gen.out);

  const auto solve = run_cli("solve --in " + inst_path + " --objective mnw");
  REQUIRE(solve.exit_code == 0);
  const auto solve_doc = json::parse(solve.out);
  CHECK(solve_doc["objective"] == "mnw");

  // Feed the solved allocation back into the auditor.
  const auto alloc_path = temp_path("alloc");
  spit(alloc_path, json{{"select", solve_doc["allocation"]["select"]}}.dump());
  const auto audit = run_cli("audit --in " + inst_path + " --alloc " + alloc_path);
  REQUIRE(audit.exit_code == 0);
  const auto audit_doc = json::parse(audit.out);
  CHECK(audit_doc["utilities"] == solve_doc["utilities"]);
  CHECK(audit_doc["pareto_optimal"] == true);
  for (const auto& agent : audit_doc["agents"]) CHECK(agent["prop1"] == true);

  // Alternative solve methods agree on the objective value.
  for (const std::string method : {"dp-agent-types", "enum-good-types"}) {
    const auto alt = run_cli("solve --in " + inst_path + " --method " + method);
    REQUIRE(alt.exit_code == 0);
    CHECK(json::parse(alt.out)["score"] == solve_doc["score"]);
  }

  const auto reduce = run_cli("reduce --from public --to decisions --objective leximin --in " +
                              inst_path);
  REQUIRE(reduce.exit_code == 0);
  CHECK(json::parse(reduce.out)["reduction"] == "public-to-decisions-leximin");

  const auto roundtrip = run_cli(
      "verify-roundtrip --reduction public-to-decisions --objective leximin --in " + inst_path);
  REQUIRE(roundtrip.exit_code == 0);
  CHECK(json::parse(roundtrip.out)["match"] == true);

  std::remove(inst_path.c_str());
  std::remove(alloc_path.c_str());
}

TEST_CASE("output files receive the exact document bytes") {
  const auto direct = run_cli(kGenPublic);
  const auto out_path = temp_path("outfile");
  const auto filed = run_cli(kGenPublic + " --out " + out_path);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(testutil::slurp(out_path) == direct.out);
  std::remove(out_path.c_str());
}

TEST_CASE("exit codes distinguish usage, validation, and scale errors") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("solve").exit_code == 1);                  // missing required --in
  CHECK(run_cli("solve --frobnicate x").exit_code == 1);   // unknown flag
  CHECK(run_cli("--help").exit_code == 0);

  CHECK(run_cli("solve --in does_not_exist.json").exit_code == 2);
  const auto bad_path = temp_path("bad");
  spit(bad_path, "{\"model\": \"public-goods\"}");
  CHECK(run_cli("solve --in " + bad_path).exit_code == 2);
  spit(bad_path, "not json at all");
  CHECK(run_cli("solve --in " + bad_path).exit_code == 2);
  CHECK(run_cli("gen --model public-goods -n 2 -m 3 --k 5 --seed 1").exit_code == 2);
  CHECK(run_cli("gen --gadget eqsp --values-count 2 --max-value 1 --objective leximin")
            .exit_code == 2);
  CHECK(run_cli("reduce --from public --to public --objective mnw --in " + bad_path)
            .exit_code == 2);

  const auto gen = run_cli(kGenPublic);
  spit(bad_path, gen.out);
  const auto refused = run_cli("solve --in " + bad_path, "FAIRALLOC_MAX_ENUM=4");
  CHECK(refused.exit_code == 3);
  CHECK(refused.err.find("error:") != std::string::npos);
  // Garbage limits are validation errors, not refusals.
  CHECK(run_cli("solve --in " + bad_path, "FAIRALLOC_MAX_ENUM=banana").exit_code == 2);
  CHECK(run_cli("solve --in " + bad_path, "FAIRALLOC_MAX_ENUM=0").exit_code == 2);
  std::remove(bad_path.c_str());
}

TEST_CASE("generated gadget documents embed the library threshold") {
  const auto gen = run_cli("gen --gadget eqsp --values-count 4 --max-value 5 --seed 3");
  REQUIRE(gen.exit_code == 0);
  const auto doc = json::parse(gen.out);
  const auto values = doc["meta"]["source"]["values"].get<std::vector<fairalloc::Value>>();
  const auto rebuilt = fairalloc::from_eqsp(values);
  CHECK(doc["meta"]["threshold"] == fairalloc::to_decimal(rebuilt.threshold.bound));
  CHECK(doc["meta"]["threshold_kind"] == "nash-product");
  CHECK(doc["valuations"] == json(rebuilt.instance.valuations));

  // The document parses as a plain instance and solves.
  const auto path = temp_path("gadget");
  spit(path, gen.out);
  const auto solve = run_cli("solve --in " + path);
  CHECK(solve.exit_code == 0);
  std::remove(path.c_str());
}

TEST_CASE("greedy refuses objectives and shapes it cannot serve") {
  const auto gen = run_cli(kGenPublic);
  const auto path = temp_path("greedy");
  spit(path, gen.out);
  CHECK(run_cli("solve --in " + path + " --method greedy").exit_code == 0);
  CHECK(run_cli("solve --in " + path + " --method greedy --objective leximin").exit_code == 2);
  std::remove(path.c_str());
}
