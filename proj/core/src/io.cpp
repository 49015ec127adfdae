#include "fairalloc/io.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include <json.hpp>

#include "fairalloc/errors.hpp"

namespace fairalloc {

namespace {

// Documents keep their fixed emission order; meta objects are re-keyed
// alphabetically (nlohmann::json sorts object keys), which is what makes
// serialization canonical.
using ojson = nlohmann::ordered_json;
using sjson = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path.empty() ? message : path + ": " + message);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const ojson& member(const ojson& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(join(path, key), "missing");
  return *it;
}

void require_keys(const ojson& obj, std::initializer_list<const char*> allowed,
                  const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return it.key() == k; }) == allowed.end()) {
      fail(join(path, it.key()), "unexpected key");
    }
  }
}

long long get_int(const ojson& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) {
    fail(path, "integer out of range");
  }
  return value.get<long long>();
}

int get_bounded_int(const ojson& value, const std::string& path, long long lo, long long hi) {
  const long long v = get_int(value, path);
  if (v < lo || v > hi) {
    fail(path, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

std::string get_string(const ojson& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.get<std::string>();
}

std::vector<Value> get_value_row(const ojson& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  std::vector<Value> row;
  row.reserve(value.size());
  for (std::size_t j = 0; j < value.size(); ++j) {
    row.push_back(get_int(value[j], path + "[" + std::to_string(j) + "]"));
  }
  return row;
}

std::vector<std::vector<Value>> get_value_table(const ojson& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array of rows");
  std::vector<std::vector<Value>> table;
  table.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    table.push_back(get_value_row(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return table;
}

Constraint parse_constraint(const ojson& value, const std::string& path) {
  if (!value.is_object()) fail(path, "expected an object");
  const std::string type = get_string(member(value, "type", path), join(path, "type"));
  if (type == "cardinality") {
    require_keys(value, {"type", "k"}, path);
    Cardinality c;
    c.k = get_bounded_int(member(value, "k", path), join(path, "k"), 0,
                          std::numeric_limits<int>::max());
    return c;
  }
  if (type == "budget") {
    require_keys(value, {"type", "B", "costs"}, path);
    Budget b;
    b.limit = get_int(member(value, "B", path), join(path, "B"));
    b.costs = get_value_row(member(value, "costs", path), join(path, "costs"));
    return b;
  }
  fail(join(path, "type"), "expected \"cardinality\" or \"budget\"");
}

std::string canonical_meta(const ojson& value, const std::string& path) {
  if (!value.is_object()) fail(path, "expected an object");
  // Re-key through the sorted-map json type.
  return sjson::parse(value.dump()).dump(2);
}

ojson instance_body(const InstanceVariant& instance);

ojson allocation_body(const Allocation& allocation) {
  ojson body = ojson::object();
  if (const auto* select = std::get_if<PublicSelection>(&allocation)) {
    auto goods = ojson::array();
    for (int g : select->goods) goods.push_back(g + 1);
    body["select"] = std::move(goods);
  } else if (const auto* partition = std::get_if<PrivatePartition>(&allocation)) {
    auto bundles = ojson::array();
    for (const auto& bundle : partition->bundles) {
      auto entry = ojson::array();
      for (int g : bundle) entry.push_back(g + 1);
      bundles.push_back(std::move(entry));
    }
    body["partition"] = std::move(bundles);
  } else {
    const auto& decisions = std::get<DecisionVector>(allocation);
    auto entries = ojson::array();
    for (int d : decisions.decisions) entries.push_back(d + 1);
    body["decisions"] = std::move(entries);
  }
  return body;
}

std::string finish(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson score_body(const NashScore& score) {
  ojson body = ojson::object();
  body["positive_count"] = score.positive_count;
  body["product"] = to_decimal(score.product);
  return body;
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  ojson root;
  try {
    root = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("instance document: expected a JSON object");

  const std::string model = get_string(member(root, "model", ""), "model");
  const int n = get_bounded_int(member(root, "n", ""), "n", 1, 1'000'000);
  const int m = get_bounded_int(member(root, "m", ""), "m", 1, 1'000'000);

  InstanceDocument doc;
  if (auto it = root.find("meta"); it != root.end()) {
    doc.meta_json = canonical_meta(*it, "meta");
  }

  if (model == "public-goods") {
    require_keys(root, {"model", "n", "m", "constraint", "valuations", "meta"}, "");
    PublicGoodsInstance inst;
    inst.agent_count = n;
    inst.good_count = m;
    inst.constraint = parse_constraint(member(root, "constraint", ""), "constraint");
    inst.valuations = get_value_table(member(root, "valuations", ""), "valuations");
    inst.validate();
    doc.instance = std::move(inst);
  } else if (model == "private-goods") {
    require_keys(root, {"model", "n", "m", "valuations", "meta"}, "");
    PrivateGoodsInstance inst;
    inst.agent_count = n;
    inst.good_count = m;
    inst.valuations = get_value_table(member(root, "valuations", ""), "valuations");
    inst.validate();
    doc.instance = std::move(inst);
  } else if (model == "public-decisions") {
    require_keys(root, {"model", "n", "m", "issues", "meta"}, "");
    const ojson& issues = member(root, "issues", "");
    if (!issues.is_array()) fail("issues", "expected an array");
    if (static_cast<int>(issues.size()) != m) {
      fail("issues", "expected m = " + std::to_string(m) + " issues, got " +
                         std::to_string(issues.size()));
    }
    PublicDecisionsInstance inst;
    inst.agent_count = n;
    for (std::size_t j = 0; j < issues.size(); ++j) {
      const std::string path = "issues[" + std::to_string(j) + "]";
      const ojson& issue = issues[j];
      if (!issue.is_object()) fail(path, "expected an object");
      require_keys(issue, {"alternatives", "values"}, path);
      DecisionIssue parsed;
      parsed.alternatives = get_bounded_int(member(issue, "alternatives", path),
                                            join(path, "alternatives"), 2, 1'000'000);
      parsed.values = get_value_table(member(issue, "values", path), join(path, "values"));
      inst.issues.push_back(std::move(parsed));
    }
    inst.validate();
    doc.instance = std::move(inst);
  } else {
    fail("model", "expected \"public-goods\", \"private-goods\", or \"public-decisions\"");
  }
  return doc;
}

namespace {

ojson instance_body(const InstanceVariant& instance) {
  ojson body = ojson::object();
  if (const auto* pub = std::get_if<PublicGoodsInstance>(&instance)) {
    body["model"] = "public-goods";
    body["n"] = pub->agent_count;
    body["m"] = pub->good_count;
    ojson constraint = ojson::object();
    if (const auto* c = std::get_if<Cardinality>(&pub->constraint)) {
      constraint["type"] = "cardinality";
      constraint["k"] = c->k;
    } else {
      const auto& b = std::get<Budget>(pub->constraint);
      constraint["type"] = "budget";
      constraint["B"] = b.limit;
      constraint["costs"] = b.costs;
    }
    body["constraint"] = std::move(constraint);
    body["valuations"] = pub->valuations;
  } else if (const auto* priv = std::get_if<PrivateGoodsInstance>(&instance)) {
    body["model"] = "private-goods";
    body["n"] = priv->agent_count;
    body["m"] = priv->good_count;
    body["valuations"] = priv->valuations;
  } else {
    const auto& dec = std::get<PublicDecisionsInstance>(instance);
    body["model"] = "public-decisions";
    body["n"] = dec.agent_count;
    body["m"] = dec.issue_count();
    auto issues = ojson::array();
    for (const auto& issue : dec.issues) {
      ojson entry = ojson::object();
      entry["alternatives"] = issue.alternatives;
      entry["values"] = issue.values;
      issues.push_back(std::move(entry));
    }
    body["issues"] = std::move(issues);
  }
  return body;
}

}  // namespace

std::string serialize_instance(const InstanceDocument& doc) {
  ojson body = instance_body(doc.instance);
  if (!doc.meta_json.empty()) body["meta"] = ojson::parse(doc.meta_json);
  return finish(body);
}

Allocation parse_allocation(const std::string& text) {
  ojson root;
  try {
    root = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("allocation document: expected a JSON object");
  require_keys(root, {"select", "partition", "decisions"}, "");
  if (root.size() != 1) {
    throw ValidationError(
        "allocation document: expected exactly one of select / partition / decisions");
  }

  if (auto it = root.find("select"); it != root.end()) {
    if (!it->is_array()) fail("select", "expected an array");
    PublicSelection x;
    for (std::size_t p = 0; p < it->size(); ++p) {
      const std::string path = "select[" + std::to_string(p) + "]";
      const long long g = get_int((*it)[p], path);
      if (g < 1) fail(path, "good indices are 1-based");
      x.goods.push_back(static_cast<int>(g - 1));
    }
    return x;
  }
  if (auto it = root.find("partition"); it != root.end()) {
    if (!it->is_array()) fail("partition", "expected an array of bundles");
    PrivatePartition x;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "partition[" + std::to_string(i) + "]";
      const ojson& bundle = (*it)[i];
      if (!bundle.is_array()) fail(path, "expected an array");
      std::vector<int> goods;
      for (std::size_t p = 0; p < bundle.size(); ++p) {
        const std::string entry_path = path + "[" + std::to_string(p) + "]";
        const long long g = get_int(bundle[p], entry_path);
        if (g < 1) fail(entry_path, "good indices are 1-based");
        goods.push_back(static_cast<int>(g - 1));
      }
      x.bundles.push_back(std::move(goods));
    }
    return x;
  }
  const ojson& decisions = *root.find("decisions");
  if (!decisions.is_array()) fail("decisions", "expected an array");
  DecisionVector x;
  for (std::size_t j = 0; j < decisions.size(); ++j) {
    const std::string path = "decisions[" + std::to_string(j) + "]";
    const long long a = get_int(decisions[j], path);
    if (a < 1) fail(path, "alternatives are 1-based");
    x.decisions.push_back(static_cast<int>(a - 1));
  }
  return x;
}

std::string serialize_allocation(const Allocation& allocation) {
  return finish(allocation_body(allocation));
}

std::string serialize_solve(const SolveResult& result) {
  ojson body = ojson::object();
  body["method"] = result.method;
  body["objective"] = objective_name(result.objective);
  body["allocation"] = allocation_body(result.allocation);
  body["utilities"] = result.utilities.raw;
  if (result.objective == Objective::mnw) {
    body["score"] = score_body(result.score);
  } else {
    body["sorted_utilities"] = result.utilities.sorted;
  }
  body["tie_break"] = to_decimal(result.tie_break_rank);
  return finish(body);
}

std::string serialize_audit(const PublicGoodsInstance& inst, const PublicSelection& x,
                            const FairnessReport& report) {
  ojson body = ojson::object();
  body["alpha"] = to_decimal(report.alpha);
  body["allocation"] = allocation_body(Allocation{x});
  body["utilities"] = utilities(inst, x);

  auto agents = ojson::array();
  for (std::size_t i = 0; i < report.agents.size(); ++i) {
    const AgentFairness& agent = report.agents[i];
    ojson entry = ojson::object();
    entry["agent"] = static_cast<int>(i) + 1;
    entry["prop_share"] = to_decimal(agent.prop_share);
    entry["rrs_share"] = agent.rrs_share;
    entry["alpha_prop"] = agent.alpha_prop ? ojson(to_decimal(*agent.alpha_prop)) : ojson(nullptr);
    entry["alpha_rrs"] = agent.alpha_rrs ? ojson(to_decimal(*agent.alpha_rrs)) : ojson(nullptr);
    entry["prop1"] = agent.prop1_satisfied;
    if (agent.prop1_witness) {
      ojson witness = ojson::object();
      if (agent.prop1_witness->removed) witness["remove"] = *agent.prop1_witness->removed + 1;
      witness["add"] = agent.prop1_witness->added + 1;
      entry["prop1_witness"] = std::move(witness);
    }
    agents.push_back(std::move(entry));
  }
  body["agents"] = std::move(agents);
  body["pareto_optimal"] = report.pareto_optimal;
  if (report.pareto_dominator) {
    body["pareto_dominator"] = allocation_body(Allocation{*report.pareto_dominator});
  }
  return finish(body);
}

namespace {

const char* back_map_description(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::public_to_decisions_mnw:
    case ReductionKind::public_to_decisions_leximin:
      return "the selection is the set of issues decided to alternative 1";
    case ReductionKind::private_to_public_mnw:
    case ReductionKind::private_to_public_leximin:
      return "selected copy j*n+i assigns good j to agent i; unassigned goods go to agent 1";
  }
  return "?";
}

ojson reduction_parameters(const ReductionArtifact& artifact) {
  ojson params = ojson::object();
  switch (artifact.kind) {
    case ReductionKind::public_to_decisions_mnw:
      params["T"] = artifact.agent_blowup;
      break;
    case ReductionKind::public_to_decisions_leximin:
      params["M"] = artifact.value_scale;
      params["identity"] = artifact.identity;
      break;
    case ReductionKind::private_to_public_mnw:
    case ReductionKind::private_to_public_leximin: {
      const auto& source = std::get<PrivateGoodsInstance>(artifact.source);
      params["copies_per_good"] = source.agent_count;
      params["k"] = source.good_count;
      break;
    }
  }
  return params;
}

InstanceVariant target_variant(const ReductionArtifact& artifact) {
  if (const auto* decisions = std::get_if<PublicDecisionsInstance>(&artifact.target)) {
    return *decisions;
  }
  return std::get<PublicGoodsInstance>(artifact.target);
}

InstanceVariant source_variant(const ReductionArtifact& artifact) {
  if (const auto* pub = std::get_if<PublicGoodsInstance>(&artifact.source)) return *pub;
  return std::get<PrivateGoodsInstance>(artifact.source);
}

}  // namespace

std::string serialize_reduction(const ReductionArtifact& artifact) {
  ojson body = ojson::object();
  body["reduction"] = reduction_kind_name(artifact.kind);
  body["objective"] = objective_name(reduction_objective(artifact.kind));
  body["parameters"] = reduction_parameters(artifact);
  body["back_map"] = back_map_description(artifact.kind);
  body["source"] = instance_body(source_variant(artifact));
  body["target"] = instance_body(target_variant(artifact));
  return finish(body);
}

std::string serialize_roundtrip(const ReductionArtifact& artifact, const RoundtripReport& report) {
  const Objective objective = reduction_objective(artifact.kind);
  ojson body = ojson::object();
  body["reduction"] = reduction_kind_name(artifact.kind);
  body["objective"] = objective_name(objective);
  body["match"] = report.match;
  body["feasible"] = report.feasible;
  if (report.ones_decided >= 0) body["ones_decided"] = report.ones_decided;
  body["target_optimum"] = allocation_body(report.target_optimum.allocation);
  body["back_mapped"] = allocation_body(report.back_mapped);
  body["source_optimum"] = allocation_body(report.source_optimum.allocation);
  if (report.feasible) {
    body["back_mapped_utilities"] = report.back_mapped_utilities.raw;
  }
  body["source_utilities"] = report.source_optimum.utilities.raw;
  if (objective == Objective::mnw) {
    if (report.feasible) body["back_mapped_score"] = score_body(report.back_mapped_score);
    body["source_score"] = score_body(report.source_optimum.score);
  } else {
    if (report.feasible) body["back_mapped_sorted"] = report.back_mapped_utilities.sorted;
    body["source_sorted"] = report.source_optimum.utilities.sorted;
  }
  return finish(body);
}

std::string serialize_gadget(const GadgetInstance& gadget, const std::string& source_json,
                             const std::string& seed_note) {
  sjson meta = sjson::object();
  meta["gadget"] = gadget.gadget;
  meta["objective"] = gadget_objective_name(gadget.objective);
  meta["threshold_kind"] = threshold_kind_name(gadget.threshold.kind);
  if (gadget.threshold.kind == GadgetThreshold::Kind::sorted_lex) {
    meta["threshold"] = gadget.threshold.sorted_bound;
  } else {
    meta["threshold"] = to_decimal(gadget.threshold.bound);
  }
  meta["yes_iff"] = gadget.yes_iff;
  if (!source_json.empty()) {
    try {
      meta["source"] = sjson::parse(source_json);
    } catch (const sjson::parse_error& e) {
      throw ValidationError(std::string("gadget source: invalid JSON: ") + e.what());
    }
  }
  if (!seed_note.empty()) meta["seed"] = seed_note;

  InstanceDocument doc;
  doc.instance = gadget.instance;
  doc.meta_json = meta.dump(2);
  return serialize_instance(doc);
}

std::string canonical_json_object(const std::string& text) {
  sjson parsed;
  try {
    parsed = sjson::parse(text);
  } catch (const sjson::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!parsed.is_object()) throw ValidationError("expected a JSON object");
  return parsed.dump(2);
}

}  // namespace fairalloc
