#pragma once

#include <variant>

#include "fairalloc/solvers.hpp"

namespace fairalloc {

// ---------------------------------------------------------------------------
// Objective-preserving reductions between the three models.  Each artifact
// packages the source instance, the constructed target instance, the
// construction parameters, and enough information to map a target optimum
// back to a source allocation.
//
//   public -> decisions (MNW): each good becomes a binary issue (alternative
//     0 = "select").  Voter blocks force every optimum to decide exactly k
//     issues to "select": kT "type A" agents value alternative 0 of every
//     issue at 1, (m-k)T "type B" agents value alternative 1 at 1, with
//     T = ceil(2mn log2(mV)) large enough that shifting one block vote costs
//     more welfare than any rearrangement of the originals recovers.
//     Requires cardinality with n <= k.
//
//   public -> decisions (leximin): two auxiliary agents replace the voter
//     blocks.  Original values are scaled by M = m^2 + 1; auxiliary agent
//     n+1 values each issue decided "select" at (m-k), agent n+2 values each
//     issue decided "reject" at k, so the pair is balanced exactly when k
//     issues are selected and the scaled originals dominate within that
//     slice.  k = m degenerates (the "reject" watcher would pin every
//     optimum away from full selection), so that case maps to the identity
//     embedding: no auxiliary agents, scale 1.
//
//   private -> public (both objectives): each good becomes n copies (copy
//     (j, owner) is target good j*n + owner, valued only by `owner` at its
//     original value); 2m dummy agents (a pair per good) value all copies of
//     their good at 1, forcing every optimum to select exactly one copy per
//     good under k = m.  Selecting copy (j, owner) assigns good j to owner.
// ---------------------------------------------------------------------------

enum class ReductionKind {
  public_to_decisions_mnw,
  public_to_decisions_leximin,
  private_to_public_mnw,
  private_to_public_leximin,
};

const char* reduction_kind_name(ReductionKind kind);
Objective reduction_objective(ReductionKind kind);

struct ReductionArtifact {
  ReductionKind kind = ReductionKind::public_to_decisions_mnw;
  std::variant<PublicGoodsInstance, PrivateGoodsInstance> source;
  std::variant<PublicDecisionsInstance, PublicGoodsInstance> target;
  long long agent_blowup = 0;  // T, voter-block size (public->decisions MNW)
  long long value_scale = 1;   // M, original-value multiplier (public->decisions leximin)
  bool identity = false;       // k == m shortcut (public->decisions leximin)
};

// T = ceil(2 m n log2(m V)): the voter-block size that makes deviating from
// exactly-k selections cost more Nash welfare than any original-agent
// rearrangement can recover.  Computed exactly: T = ceil_log2((mV)^(2mn)).
long long decision_blowup(const PublicGoodsInstance& inst);

// Requires cardinality with n <= k.  (k = m is fine: with no room to deviate
// the voter blocks are balanced and the originals decide the tie.)
ReductionArtifact public_to_decision_mnw(const PublicGoodsInstance& inst);

// Same construction with an explicit block size; the negative-control tests
// use undersized T to exhibit a broken reduction.  T = 0 means no auxiliary
// agents at all.
ReductionArtifact public_to_decision_mnw_with_blowup(const PublicGoodsInstance& inst, long long T);

// Requires cardinality with n <= k.
ReductionArtifact public_to_decision_lex(const PublicGoodsInstance& inst);

ReductionArtifact private_to_public_mnw(const PrivateGoodsInstance& inst);
ReductionArtifact private_to_public_lex(const PrivateGoodsInstance& inst);

// Maps a target-side allocation to a source-side allocation:
//   decisions target: the selection is the set of issues decided to
//     alternative 0;
//   public target (copy construction): good j goes to the owner of its
//     selected copy (lowest owner on the off-optimum chance several copies
//     are selected); goods with no selected copy default to agent 0.
Allocation back_map(const ReductionArtifact& artifact, const Allocation& target_allocation);

// ---------------------------------------------------------------------------
// End-to-end check: solve the target with the matching exact oracle, map the
// optimum back, and compare source-side objective values against a direct
// source solve.  `match` requires exact equality of NashScore (MNW) or the
// sorted utility vector (leximin).
// ---------------------------------------------------------------------------
struct RoundtripReport {
  bool match = false;
  bool feasible = false;    // back-mapped allocation satisfies the source model
  int ones_decided = -1;    // issues decided to alternative 0; -1 for public targets
  SolveResult target_optimum;
  Allocation back_mapped;
  UtilityVector back_mapped_utilities;  // source-side
  NashScore back_mapped_score;          // source-side (MNW kinds)
  SolveResult source_optimum;
};

RoundtripReport verify_roundtrip(const ReductionArtifact& artifact, const SolveLimits& limits = {});

}  // namespace fairalloc
