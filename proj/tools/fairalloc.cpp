// Command-line front end: generate, solve, audit, reduce, and verify
// instances of the fair public-goods selection models.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 scale refusal.
// Reports go to --out (or stdout) and are byte-deterministic; wall-clock
// timing goes to stderr so outputs stay reproducible.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairalloc/errors.hpp"
#include "fairalloc/gen.hpp"
#include "fairalloc/io.hpp"
#include "fairalloc/reductions.hpp"

namespace {

using fairalloc::ScaleRefusal;
using fairalloc::ValidationError;
using sjson = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + out_path + " for writing");
  out << text;
}

fairalloc::ValueSpec parse_value_spec(const std::string& text) {
  if (text == "binary") return fairalloc::ValueSpec::make_binary();
  constexpr const char* kPrefix = "uniform:";
  if (text.rfind(kPrefix, 0) == 0) {
    const std::string rest = text.substr(std::string(kPrefix).size());
    try {
      const long long max = std::stoll(rest);
      if (max < 1) throw ValidationError("--values uniform:V needs V >= 1");
      return fairalloc::ValueSpec::uniform(max);
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw ValidationError("--values: expected binary or uniform:V, got \"" + text + "\"");
}

sjson one_based(const std::vector<std::vector<int>>& family) {
  sjson result = sjson::array();
  for (const auto& set : family) {
    sjson entry = sjson::array();
    for (int e : set) entry.push_back(e + 1);
    result.push_back(std::move(entry));
  }
  return result;
}

struct GenOptions {
  std::string model = "public-goods";
  std::string gadget;
  std::string values = "binary";
  std::string objective = "mnw";
  std::uint64_t seed = 0;
  int agents = 2;
  int goods = 4;
  int k = -1;
  long long budget = -1;
  long long max_cost = 3;
  int alternatives = 2;
  int universe = 4;
  int family_size = 4;
  int set_size = 2;
  int packing_size = 1;
  int values_count = 4;
  long long max_value = 4;
  int variables = 3;
  int clauses = 3;
  int true_budget = 1;
  std::string out;
};

std::string run_gen_gadget(const GenOptions& opt) {
  const std::string seed_note = std::to_string(opt.seed);
  if (opt.gadget == "setcover") {
    auto family = fairalloc::gen_set_cover_family(opt.seed, opt.universe, opt.family_size);
    if (opt.k < 0) throw ValidationError("--k is required for the set-cover gadget");
    auto gadget = fairalloc::from_set_cover(opt.universe, family, opt.k);
    sjson source{{"universe", opt.universe}, {"family", one_based(family)}, {"k", opt.k}};
    return fairalloc::serialize_gadget(gadget, source.dump(), seed_note);
  }
  if (opt.gadget == "ersp") {
    auto family =
        fairalloc::gen_regular_family(opt.seed, opt.universe, opt.family_size, opt.set_size);
    auto gadget = fairalloc::from_ersp(opt.universe, family, opt.set_size, opt.packing_size);
    sjson source{{"elements", opt.universe},
                 {"family", one_based(family)},
                 {"set_size", opt.set_size},
                 {"packing_size", opt.packing_size}};
    return fairalloc::serialize_gadget(gadget, source.dump(), seed_note);
  }
  if (opt.gadget == "eqsp") {
    auto values = fairalloc::gen_even_sum_values(opt.seed, opt.values_count, opt.max_value);
    const auto objective = opt.objective == "maxmin" ? fairalloc::GadgetObjective::maxmin
                                                     : fairalloc::GadgetObjective::mnw;
    if (opt.objective != "maxmin" && opt.objective != "mnw") {
      throw ValidationError("--objective: the partition gadget targets mnw or maxmin");
    }
    auto gadget = fairalloc::from_eqsp(values, objective);
    sjson source{{"values", values}, {"padded_values", fairalloc::eqsp_pad(values)}};
    return fairalloc::serialize_gadget(gadget, source.dump(), seed_note);
  }
  if (opt.gadget == "msat") {
    auto clauses = fairalloc::gen_monotone_clauses(opt.seed, opt.variables, opt.clauses);
    auto gadget = fairalloc::from_monotone_sat(opt.variables, clauses, opt.true_budget);
    sjson source{{"variables", opt.variables},
                 {"clauses", one_based(clauses)},
                 {"true_budget", opt.true_budget}};
    return fairalloc::serialize_gadget(gadget, source.dump(), seed_note);
  }
  throw ValidationError("--gadget: expected setcover, ersp, eqsp, or msat");
}

std::string run_gen(const GenOptions& opt) {
  if (!opt.gadget.empty()) return run_gen_gadget(opt);

  const fairalloc::ValueSpec spec = parse_value_spec(opt.values);
  sjson meta{{"seed", opt.seed}, {"values", opt.values}};
  fairalloc::InstanceDocument doc;

  if (opt.model == "public-goods") {
    if (opt.budget >= 0 && opt.k >= 0) {
      throw ValidationError("--k and --budget are mutually exclusive");
    }
    if (opt.budget >= 0) {
      doc.instance = fairalloc::gen_public_budget(opt.seed, opt.agents, opt.goods, opt.budget,
                                                  opt.max_cost, spec);
      meta["max_cost"] = opt.max_cost;
    } else {
      const int k = opt.k >= 0 ? opt.k : opt.goods / 2;
      doc.instance = fairalloc::gen_public_cardinality(opt.seed, opt.agents, opt.goods, k, spec);
    }
  } else if (opt.model == "private-goods") {
    doc.instance = fairalloc::gen_private(opt.seed, opt.agents, opt.goods, spec);
  } else if (opt.model == "public-decisions") {
    doc.instance =
        fairalloc::gen_decisions(opt.seed, opt.agents, opt.goods, opt.alternatives, spec);
    meta["alternatives"] = opt.alternatives;
  } else {
    throw ValidationError(
        "--model: expected public-goods, private-goods, or public-decisions");
  }
  doc.meta_json = meta.dump(2);
  return fairalloc::serialize_instance(doc);
}

struct SolveOptions {
  std::string in;
  std::string objective = "mnw";
  std::string method = "bruteforce";
  std::string out;
};

std::string run_solve(const SolveOptions& opt) {
  const auto limits = fairalloc::SolveLimits::from_env();
  const auto doc = fairalloc::parse_instance(read_file(opt.in));
  const auto objective = fairalloc::objective_from_name(opt.objective);

  fairalloc::SolveResult result;
  if (const auto* pub = std::get_if<fairalloc::PublicGoodsInstance>(&doc.instance)) {
    if (opt.method == "bruteforce") {
      result = objective == fairalloc::Objective::mnw
                   ? fairalloc::brute_force_mnw(*pub, limits)
                   : fairalloc::brute_force_leximin(*pub, limits);
    } else if (opt.method == "dp-agent-types") {
      result = fairalloc::dp_const_agent_types(*pub, objective, limits);
    } else if (opt.method == "enum-good-types") {
      result = fairalloc::enum_const_good_types(*pub, objective, limits);
    } else if (opt.method == "greedy") {
      if (objective != fairalloc::Objective::mnw) {
        throw ValidationError("--method greedy targets the mnw objective");
      }
      result = fairalloc::alg_greedy(*pub);
    } else {
      throw ValidationError("--method: expected bruteforce, dp-agent-types, enum-good-types, "
                            "or greedy");
    }
  } else if (const auto* priv = std::get_if<fairalloc::PrivateGoodsInstance>(&doc.instance)) {
    if (opt.method != "bruteforce") {
      throw ValidationError("private-goods instances support --method bruteforce only");
    }
    result = fairalloc::brute_force_private(*priv, objective, limits);
  } else {
    if (opt.method != "bruteforce") {
      throw ValidationError("public-decisions instances support --method bruteforce only");
    }
    result = fairalloc::brute_force_decisions(
        std::get<fairalloc::PublicDecisionsInstance>(doc.instance), objective, limits);
  }
  return fairalloc::serialize_solve(result);
}

struct AuditOptions {
  std::string in;
  std::string alloc;
  std::string alpha = "1";
  std::string out;
};

std::string run_audit(const AuditOptions& opt) {
  const auto doc = fairalloc::parse_instance(read_file(opt.in));
  const auto* pub = std::get_if<fairalloc::PublicGoodsInstance>(&doc.instance);
  if (!pub) throw ValidationError("audit requires a public-goods instance");

  const auto allocation = fairalloc::parse_allocation(read_file(opt.alloc));
  const auto* selection = std::get_if<fairalloc::PublicSelection>(&allocation);
  if (!selection) throw ValidationError("audit requires a {\"select\": [...]} allocation");

  const auto alpha = fairalloc::parse_rational(opt.alpha);
  const auto report = fairalloc::audit(*pub, *selection, alpha);
  return fairalloc::serialize_audit(*pub, *selection, report);
}

struct ReduceOptions {
  std::string from = "public";
  std::string to;
  std::string objective = "mnw";
  std::string in;
  std::string out;
  bool roundtrip = false;
};

fairalloc::ReductionArtifact build_artifact(const ReduceOptions& opt) {
  const auto doc = fairalloc::parse_instance(read_file(opt.in));
  const auto objective = fairalloc::objective_from_name(opt.objective);

  if (opt.from == "public" || opt.from == "public-to-decisions") {
    if (!opt.to.empty() && opt.to != "decisions") {
      throw ValidationError("--from public reduces --to decisions");
    }
    const auto* pub = std::get_if<fairalloc::PublicGoodsInstance>(&doc.instance);
    if (!pub) throw ValidationError("--from public expects a public-goods instance");
    return objective == fairalloc::Objective::mnw ? fairalloc::public_to_decision_mnw(*pub)
                                                  : fairalloc::public_to_decision_lex(*pub);
  }
  if (opt.from == "private" || opt.from == "private-to-public") {
    if (!opt.to.empty() && opt.to != "public") {
      throw ValidationError("--from private reduces --to public");
    }
    const auto* priv = std::get_if<fairalloc::PrivateGoodsInstance>(&doc.instance);
    if (!priv) throw ValidationError("--from private expects a private-goods instance");
    return objective == fairalloc::Objective::mnw ? fairalloc::private_to_public_mnw(*priv)
                                                  : fairalloc::private_to_public_lex(*priv);
  }
  throw ValidationError("--from: expected public or private");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair selection of indivisible public goods: exact and approximate solvers, "
               "fairness audits, model reductions, and hardness gadgets"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance or hardness gadget");
  gen_cmd->add_option("--model", gen.model,
                      "public-goods | private-goods | public-decisions");
  gen_cmd->add_option("--gadget", gen.gadget, "setcover | ersp | eqsp | msat");
  gen_cmd->add_option("--agents,-n", gen.agents, "agent count");
  gen_cmd->add_option("--goods,-m", gen.goods, "good / issue count");
  gen_cmd->add_option("--k", gen.k, "cardinality bound (setcover: cover size)");
  gen_cmd->add_option("--budget", gen.budget, "budget limit (public-goods)");
  gen_cmd->add_option("--max-cost", gen.max_cost, "cost ceiling for budget instances");
  gen_cmd->add_option("--values", gen.values, "binary | uniform:V");
  gen_cmd->add_option("--alternatives", gen.alternatives, "alternatives per issue");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--universe,--elements", gen.universe,
                      "universe size (setcover / ersp)");
  gen_cmd->add_option("--family-size", gen.family_size, "number of sets (setcover / ersp)");
  gen_cmd->add_option("--set-size", gen.set_size, "regular set size (ersp)");
  gen_cmd->add_option("--packing-size", gen.packing_size, "packing size (ersp)");
  gen_cmd->add_option("--values-count", gen.values_count, "multiset size (eqsp)");
  gen_cmd->add_option("--max-value", gen.max_value, "value ceiling (eqsp)");
  gen_cmd->add_option("--objective", gen.objective, "gadget objective (eqsp: mnw | maxmin)");
  gen_cmd->add_option("--variables", gen.variables, "variable count (msat)");
  gen_cmd->add_option("--clauses", gen.clauses, "clause count (msat)");
  gen_cmd->add_option("--true-budget", gen.true_budget, "maximum true variables (msat)");
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance");
  solve_cmd->add_option("--in", solve.in, "instance file")->required();
  solve_cmd->add_option("--objective", solve.objective, "mnw | leximin");
  solve_cmd->add_option("--method", solve.method,
                        "bruteforce | dp-agent-types | enum-good-types | greedy");
  solve_cmd->add_option("--out", solve.out, "output file (default stdout)");

  AuditOptions audit;
  CLI::App* audit_cmd = app.add_subcommand("audit", "audit an allocation's fairness");
  audit_cmd->add_option("--in", audit.in, "instance file")->required();
  audit_cmd->add_option("--alloc", audit.alloc, "allocation file")->required();
  audit_cmd->add_option("--alpha", audit.alpha, "approximation factor (rational, default 1)");
  audit_cmd->add_option("--out", audit.out, "output file (default stdout)");

  ReduceOptions reduce;
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "construct a model reduction");
  reduce_cmd->add_option("--from", reduce.from, "public | private");
  reduce_cmd->add_option("--to", reduce.to, "decisions | public (inferred from --from)");
  reduce_cmd->add_option("--objective", reduce.objective, "mnw | leximin");
  reduce_cmd->add_option("--in", reduce.in, "source instance file")->required();
  reduce_cmd->add_option("--out", reduce.out, "output file (default stdout)");

  ReduceOptions roundtrip;
  CLI::App* roundtrip_cmd = app.add_subcommand(
      "verify-roundtrip", "solve a reduction's target, map back, compare objective values");
  roundtrip_cmd->add_option("--reduction", roundtrip.from,
                            "public-to-decisions | private-to-public");
  roundtrip_cmd->add_option("--objective", roundtrip.objective, "mnw | leximin");
  roundtrip_cmd->add_option("--in", roundtrip.in, "source instance file")->required();
  roundtrip_cmd->add_option("--out", roundtrip.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    std::string output;
    std::string out_path;
    if (gen_cmd->parsed()) {
      output = run_gen(gen);
      out_path = gen.out;
    } else if (solve_cmd->parsed()) {
      output = run_solve(solve);
      out_path = solve.out;
    } else if (audit_cmd->parsed()) {
      output = run_audit(audit);
      out_path = audit.out;
    } else if (reduce_cmd->parsed()) {
      output = fairalloc::serialize_reduction(build_artifact(reduce));
      out_path = reduce.out;
    } else if (roundtrip_cmd->parsed()) {
      const auto artifact = build_artifact(roundtrip);
      const auto report =
          fairalloc::verify_roundtrip(artifact, fairalloc::SolveLimits::from_env());
      output = fairalloc::serialize_roundtrip(artifact, report);
      out_path = roundtrip.out;
    }
    write_output(out_path, output);
  } catch (const ScaleRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  std::cerr << "timing_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  return 0;
}
