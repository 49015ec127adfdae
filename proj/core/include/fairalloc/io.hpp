#pragma once

#include <string>
#include <variant>

#include "fairalloc/fairness.hpp"
#include "fairalloc/hardness.hpp"
#include "fairalloc/reductions.hpp"

namespace fairalloc {

// ---------------------------------------------------------------------------
// JSON wire format.  One document per file, 2-space indentation, trailing
// newline, 1-based indices on the wire (0-based inside the library).  Exact
// quantities that can exceed 64 bits (products, thresholds, tie-break ranks)
// and all rationals travel as decimal strings ("4", "3/2").  Serialization
// is canonical: fixed key order for instance documents, sorted keys inside
// `meta`, so byte-identical outputs are reproducible and
// serialize(parse(text)) is a fixed point.
//
// Instances:
//   {"model": "public-goods", "n": 2, "m": 3,
//    "constraint": {"type": "cardinality", "k": 2} |
//                  {"type": "budget", "B": 4, "costs": [2, 2, 3]},
//    "valuations": [[2, 1, 0], [0, 1, 2]], "meta": {...}}
//   {"model": "private-goods", "n": 2, "m": 3, "valuations": [...], ...}
//   {"model": "public-decisions", "n": 2, "m": 2,
//    "issues": [{"alternatives": 2, "values": [[3, 0], [1, 2]]}, ...], ...}
//
// Allocations:
//   {"select": [1, 3]} | {"partition": [[1], [2, 3]]} | {"decisions": [1, 2]}
//
// Parse errors throw ValidationError whose message names the offending path
// (e.g. "valuations[1]: agent 2 values no good").
// ---------------------------------------------------------------------------

using InstanceVariant =
    std::variant<PublicGoodsInstance, PrivateGoodsInstance, PublicDecisionsInstance>;

struct InstanceDocument {
  InstanceVariant instance;
  // Canonicalized JSON object text ("" when the document has no meta).  The
  // library treats it as opaque but canonical (sorted keys, 2-space indent).
  std::string meta_json;
};

InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc);

Allocation parse_allocation(const std::string& text);
std::string serialize_allocation(const Allocation& allocation);

// Report documents.  Objective values are recomputed from the allocation at
// serialization time, so a report can never drift from its allocation.
std::string serialize_solve(const SolveResult& result);
std::string serialize_audit(const PublicGoodsInstance& inst, const PublicSelection& x,
                            const FairnessReport& report);
std::string serialize_reduction(const ReductionArtifact& artifact);
std::string serialize_roundtrip(const ReductionArtifact& artifact, const RoundtripReport& report);

// The instance document for a gadget, with meta carrying the gadget name,
// objective, threshold (kind + exact value), the YES-equivalence statement,
// and the caller-supplied source description (canonical JSON object text,
// may be empty).
std::string serialize_gadget(const GadgetInstance& gadget, const std::string& source_json,
                             const std::string& seed_note = "");

// Canonicalize a JSON object string: sorted keys, canonical spacing.  Used
// for meta blocks assembled by callers.  Throws ValidationError when `text`
// is not a JSON object.
std::string canonical_json_object(const std::string& text);

}  // namespace fairalloc
