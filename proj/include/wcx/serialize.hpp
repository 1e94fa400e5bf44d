#pragma once

// JSON and TSV forms of everything the command line emits. Every JSON
// document is an envelope {schema_version, kind, signature, profile,
// config_digest, payload}; parse_* inverts serialize_* exactly.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "wcx/grothendieck.hpp"
#include "wcx/kostant.hpp"
#include "wcx/trace_skeleton.hpp"

namespace wcx {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const WeightVector& w);
Json to_json(ExtInt v);
Json to_json(const WeightProfile& prof);
Json to_json(const BlockComposition& comp);
Json to_json(const Rational& r);
Json to_json(const Laurent& x);
Json to_json(const TorusElement& x);
Json to_json(const VirtualLeviModule& vm);
Json to_json(const TruncationSpec& spec);
Json to_json(const CosetToken& token);
Json to_json(const StratumTerm& term);
Json to_json(const StratumClass& sc);
Json to_json(const TraceTerm& term);
Json to_json(const TraceSubTerm& sub);

WeightVector weight_from_json(const Json& j);
ExtInt ext_int_from_json(const Json& j);
WeightProfile profile_from_json(const Json& j);
BlockComposition composition_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Laurent laurent_from_json(const Json& j);
TorusElement torus_from_json(const Json& j);
VirtualLeviModule module_from_json(const Json& j);
TruncationSpec truncation_from_json(const Json& j);
CosetToken token_from_json(const Json& j);
StratumTerm stratum_term_from_json(const Json& j);
StratumClass class_from_json(const Json& j);
TraceTerm trace_term_from_json(const Json& j);
TraceSubTerm sub_term_from_json(const Json& j);

/// Wraps a payload in the common envelope.
Json envelope(const std::string& kind, const GroupSignature& sig, const std::optional<WeightProfile>& prof,
              const RunConfig& cfg, Json payload);
/// Checks schema_version and kind; returns the payload.
const Json& open_envelope(const Json& doc, const std::string& kind);

/// Pretty JSON text with a trailing newline; deterministic (sorted keys).
std::string dump(const Json& j);

/// Tab-separated renderings, one row per constituent or term.
std::string tsv_module(const VirtualLeviModule& vm, const std::vector<int>& strata);
std::string tsv_class(const StratumClass& sc);
std::string tsv_trace(const std::vector<TraceTerm>& terms);

}  // namespace wcx
