#pragma once

// JSON views of the engine's results, and the TraceDocument envelope the
// command line writes with --json.

#include <string>

#include <json.hpp>

#include "gentzen/game.hpp"
#include "gentzen/proof.hpp"
#include "gentzen/stabilization.hpp"

namespace gentzen::report {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"schema_version", "invocation": {"command", "args"}, "kind", "payload"}
json trace_document(const std::string& command, const json& args, const std::string& kind, const json& payload);

json to_json(const seq::DescentReport& r);
json to_json(const game::GameState& s);
json to_json(const game::Move& m);
json to_json(const game::Trace& t);
json to_json(const game::StrategyTree& tree);
json to_json(const proof::Proof& p);

struct ProofCheckReport {
    proof::Proof proof;
    std::optional<proof::CheckError> error;
    proof::LengthMetric metric = proof::LengthMetric::Symbols;
};
json to_json(const ProofCheckReport& r);

struct SearchReport {
    std::size_t max_length = 0;
    std::size_t ceiling = 0;
    proof::LengthMetric metric = proof::LengthMetric::Symbols;
    std::optional<proof::Proof> found;
    proof::SearchStats stats;
};
json to_json(const SearchReport& r);

// Accepts "witness 0 1" or {"kind": "witness", "index": 0, "value": 1}.
// Throws std::invalid_argument.
game::Move move_from_json(const json& j);

}  // namespace gentzen::report
