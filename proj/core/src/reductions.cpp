#include "fairalloc/reductions.hpp"

#include <algorithm>
#include <string>

#include "fairalloc/errors.hpp"

namespace fairalloc {

const char* reduction_kind_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::public_to_decisions_mnw: return "public-to-decisions-mnw";
    case ReductionKind::public_to_decisions_leximin: return "public-to-decisions-leximin";
    case ReductionKind::private_to_public_mnw: return "private-to-public-mnw";
    case ReductionKind::private_to_public_leximin: return "private-to-public-leximin";
  }
  return "?";
}

Objective reduction_objective(ReductionKind kind) {
  return (kind == ReductionKind::public_to_decisions_mnw ||
          kind == ReductionKind::private_to_public_mnw)
             ? Objective::mnw
             : Objective::leximin;
}

namespace {

int require_cardinality_at_least_n(const PublicGoodsInstance& inst) {
  inst.validate();
  if (!inst.is_cardinality()) {
    throw UnsupportedError("model reductions require a cardinality constraint");
  }
  const int k = inst.cardinality_k();
  if (k < inst.agent_count) {
    throw UnsupportedError("the decisions constructions require k >= n (got k=" +
                           std::to_string(k) + ", n=" + std::to_string(inst.agent_count) + ")");
  }
  return k;
}

// One binary issue per good; alternative 0 means "select the good".
DecisionIssue binary_issue(int agent_count) {
  DecisionIssue issue;
  issue.alternatives = 2;
  issue.values.assign(agent_count, {0, 0});
  return issue;
}

}  // namespace

long long decision_blowup(const PublicGoodsInstance& inst) {
  inst.validate();
  const BigInt base = BigInt(inst.good_count) * inst.max_value();
  const unsigned long exponent =
      2ul * static_cast<unsigned long>(inst.good_count) *
      static_cast<unsigned long>(inst.agent_count);
  // T = ceil(2mn log2(mV)) computed exactly as ceil(log2((mV)^(2mn))).
  return ceil_log2(ipow(base, exponent));
}

ReductionArtifact public_to_decision_mnw_with_blowup(const PublicGoodsInstance& inst,
                                                     long long T) {
  const int k = require_cardinality_at_least_n(inst);
  if (T < 0) throw ValidationError("voter-block size T must be non-negative");
  const int n = inst.agent_count;
  const int m = inst.good_count;

  PublicDecisionsInstance target;
  const long long select_voters = static_cast<long long>(k) * T;
  const long long reject_voters = static_cast<long long>(m - k) * T;
  const long long total_agents = n + select_voters + reject_voters;
  if (total_agents > 1'000'000'000) {
    throw ScaleRefusal("decisions target would have " + std::to_string(total_agents) +
                           " agents (n + mT)",
                       std::to_string(total_agents));
  }
  target.agent_count = static_cast<int>(total_agents);
  target.issues.reserve(m);
  for (int j = 0; j < m; ++j) {
    DecisionIssue issue = binary_issue(target.agent_count);
    for (int i = 0; i < n; ++i) issue.values[i][0] = inst.value(i, j);
    for (long long a = 0; a < select_voters; ++a) issue.values[n + a][0] = 1;
    for (long long b = 0; b < reject_voters; ++b) issue.values[n + select_voters + b][1] = 1;
    target.issues.push_back(std::move(issue));
  }

  ReductionArtifact artifact;
  artifact.kind = ReductionKind::public_to_decisions_mnw;
  artifact.source = inst;
  artifact.target = std::move(target);
  artifact.agent_blowup = T;
  return artifact;
}

ReductionArtifact public_to_decision_mnw(const PublicGoodsInstance& inst) {
  return public_to_decision_mnw_with_blowup(inst, decision_blowup(inst));
}

ReductionArtifact public_to_decision_lex(const PublicGoodsInstance& inst) {
  const int k = require_cardinality_at_least_n(inst);
  const int n = inst.agent_count;
  const int m = inst.good_count;

  ReductionArtifact artifact;
  artifact.kind = ReductionKind::public_to_decisions_leximin;
  artifact.source = inst;

  PublicDecisionsInstance target;
  if (k == m) {
    // Selecting everything is forced, so the instance embeds directly as m
    // binary issues; the watcher pair below would only obstruct (it votes
    // against full selection).
    artifact.identity = true;
    artifact.value_scale = 1;
    target.agent_count = n;
    for (int j = 0; j < m; ++j) {
      DecisionIssue issue = binary_issue(n);
      for (int i = 0; i < n; ++i) issue.values[i][0] = inst.value(i, j);
      target.issues.push_back(std::move(issue));
    }
  } else {
    // Two watcher agents force exactly k issues to "select": the select
    // watcher earns m-k per selected issue, the reject watcher k per
    // rejected issue — these cross exactly at k selections, and the
    // min-first leximin objective pins the crossing.  Original values are
    // scaled by M = m^2+1 so every positive original utility clears both
    // watchers and the original comparison is untouched.
    const long long M = static_cast<long long>(m) * m + 1;
    artifact.value_scale = M;
    target.agent_count = n + 2;
    for (int j = 0; j < m; ++j) {
      DecisionIssue issue = binary_issue(n + 2);
      for (int i = 0; i < n; ++i) issue.values[i][0] = M * inst.value(i, j);
      issue.values[n][0] = m - k;  // select watcher
      issue.values[n + 1][1] = k;  // reject watcher
      target.issues.push_back(std::move(issue));
    }
  }
  artifact.target = std::move(target);
  return artifact;
}

namespace {

ReductionArtifact private_to_public_impl(const PrivateGoodsInstance& inst, ReductionKind kind) {
  inst.validate();
  const int n = inst.agent_count;
  const int m = inst.good_count;

  // Copy (j, owner) sits at target index j*n + owner; selecting it assigns
  // good j to `owner`.
  PublicGoodsInstance target;
  target.agent_count = n + 2 * m;
  target.good_count = n * m;
  target.constraint = Cardinality{m};
  target.valuations.assign(target.agent_count, std::vector<Value>(target.good_count, 0));
  for (int j = 0; j < m; ++j) {
    for (int owner = 0; owner < n; ++owner) {
      target.valuations[owner][j * n + owner] = inst.value(owner, j);
    }
    // The dummy pair for good j values every copy of good j at 1; under
    // k = m every optimum selects exactly one copy per good, or the pair
    // of some other good starves.
    for (int copy = 0; copy < n; ++copy) {
      target.valuations[n + 2 * j][j * n + copy] = 1;
      target.valuations[n + 2 * j + 1][j * n + copy] = 1;
    }
  }

  ReductionArtifact artifact;
  artifact.kind = kind;
  artifact.source = inst;
  artifact.target = std::move(target);
  return artifact;
}

}  // namespace

ReductionArtifact private_to_public_mnw(const PrivateGoodsInstance& inst) {
  return private_to_public_impl(inst, ReductionKind::private_to_public_mnw);
}

ReductionArtifact private_to_public_lex(const PrivateGoodsInstance& inst) {
  return private_to_public_impl(inst, ReductionKind::private_to_public_leximin);
}

Allocation back_map(const ReductionArtifact& artifact, const Allocation& target_allocation) {
  switch (artifact.kind) {
    case ReductionKind::public_to_decisions_mnw:
    case ReductionKind::public_to_decisions_leximin: {
      const auto* decisions = std::get_if<DecisionVector>(&target_allocation);
      if (!decisions) {
        throw ValidationError("back_map: expected a decision vector for a decisions target");
      }
      const auto& target = std::get<PublicDecisionsInstance>(artifact.target);
      require_feasible(target, *decisions);
      PublicSelection x;
      for (std::size_t j = 0; j < decisions->decisions.size(); ++j) {
        if (decisions->decisions[j] == 0) x.goods.push_back(static_cast<int>(j));
      }
      return x;
    }
    case ReductionKind::private_to_public_mnw:
    case ReductionKind::private_to_public_leximin: {
      const auto* selection = std::get_if<PublicSelection>(&target_allocation);
      if (!selection) {
        throw ValidationError("back_map: expected a selection for a public-goods target");
      }
      const auto& target = std::get<PublicGoodsInstance>(artifact.target);
      require_feasible(target, *selection);
      const auto& source = std::get<PrivateGoodsInstance>(artifact.source);
      const int n = source.agent_count;

      PrivatePartition partition;
      partition.bundles.assign(n, {});
      std::vector<char> assigned(source.good_count, 0);
      for (int g : selection->goods) {
        const int good = g / n;
        const int owner = g % n;
        // First selected copy wins; extra copies of the same good (possible
        // only off-optimum) are ignored.
        if (!assigned[good]) {
          assigned[good] = 1;
          partition.bundles[owner].push_back(good);
        }
      }
      // Goods with no selected copy (off-optimum targets only) default to
      // agent 0 so the result is always a partition.
      for (int good = 0; good < source.good_count; ++good) {
        if (!assigned[good]) partition.bundles[0].push_back(good);
      }
      for (auto& bundle : partition.bundles) std::sort(bundle.begin(), bundle.end());
      return partition;
    }
  }
  throw ValidationError("back_map: unknown reduction kind");
}

RoundtripReport verify_roundtrip(const ReductionArtifact& artifact, const SolveLimits& limits) {
  const Objective objective = reduction_objective(artifact.kind);
  RoundtripReport report;

  const bool decisions_target =
      std::holds_alternative<PublicDecisionsInstance>(artifact.target);
  if (decisions_target) {
    report.target_optimum = brute_force_decisions(
        std::get<PublicDecisionsInstance>(artifact.target), objective, limits);
  } else {
    const auto& target = std::get<PublicGoodsInstance>(artifact.target);
    report.target_optimum = objective == Objective::mnw ? brute_force_mnw(target, limits)
                                                        : brute_force_leximin(target, limits);
  }

  report.back_mapped = back_map(artifact, report.target_optimum.allocation);
  if (decisions_target) {
    report.ones_decided =
        static_cast<int>(std::get<PublicSelection>(report.back_mapped).goods.size());
  }

  if (const auto* source = std::get_if<PublicGoodsInstance>(&artifact.source)) {
    const auto& x = std::get<PublicSelection>(report.back_mapped);
    report.feasible = is_feasible(*source, x);
    report.source_optimum = objective == Objective::mnw ? brute_force_mnw(*source, limits)
                                                        : brute_force_leximin(*source, limits);
    if (report.feasible) {
      std::vector<Value> utils = utilities(*source, x);
      report.back_mapped_score = nash_score_of(utils);
      report.back_mapped_utilities = UtilityVector::of(std::move(utils));
    }
  } else {
    const auto& source_private = std::get<PrivateGoodsInstance>(artifact.source);
    const auto& x = std::get<PrivatePartition>(report.back_mapped);
    report.feasible = is_feasible(source_private, x);
    report.source_optimum = brute_force_private(source_private, objective, limits);
    if (report.feasible) {
      std::vector<Value> utils = utilities(source_private, x);
      report.back_mapped_score = nash_score_of(utils);
      report.back_mapped_utilities = UtilityVector::of(std::move(utils));
    }
  }

  if (report.feasible) {
    report.match = objective == Objective::mnw
                       ? report.back_mapped_score == report.source_optimum.score
                       : report.back_mapped_utilities.sorted ==
                             report.source_optimum.utilities.sorted;
  }
  return report;
}

}  // namespace fairalloc
