#include "gentzen/report.hpp"

#include "gentzen/ordinal.hpp"

namespace gentzen::report {

namespace {

std::string_view metric_name(proof::LengthMetric m) { return m == proof::LengthMetric::Steps ? "steps" : "symbols"; }

std::string_view move_kind(game::Move::Kind k) {
    switch (k) {
        case game::Move::Kind::OrLeft: return "or-left";
        case game::Move::Kind::OrRight: return "or-right";
        case game::Move::Kind::Witness: return "witness";
        case game::Move::Kind::PointAt: return "point";
        case game::Move::Kind::Answer: return "answer";
    }
    return "?";
}

std::string_view formula_kind(const fol::Formula& f) {
    switch (f.kind()) {
        case fol::Formula::Kind::Eq:
        case fol::Formula::Kind::Gt:
        case fol::Formula::Kind::Not: return "literal";
        case fol::Formula::Kind::Or: return "or";
        case fol::Formula::Kind::And: return "and";
        case fol::Formula::Kind::Forall: return "forall";
        case fol::Formula::Kind::Exists: return "exists";
    }
    return "?";
}

}  // namespace

json trace_document(const std::string& command, const json& args, const std::string& kind, const json& payload) {
    return {
        {"schema_version", kSchemaVersion},
        {"invocation", {{"command", command}, {"args", args}}},
        {"kind", kind},
        {"payload", payload},
    };
}

json to_json(const seq::DescentReport& r) {
    json j = {
        {"inspected", r.inspected},
        {"strict_decreases", r.strict_decreases},
        {"violation", r.violation ? json(*r.violation) : json(nullptr)},
        {"final", ord::render_brackets(r.final_value)},
        {"final_cnf", ord::render_cnf(r.final_value)},
        {"certified", r.certified()},
    };
    if (r.stabilized_at) {
        j["stabilized_at"] = r.stabilized_at->index;
        j["certificate"] = std::string(seq::to_string(r.stabilized_at->kind));
    } else {
        j["stabilized_at"] = nullptr;
        j["certificate"] = nullptr;
    }
    return j;
}

json to_json(const game::GameState& s) {
    json board = json::array();
    for (const auto& f : s.board) {
        json entry = {
            {"text", fol::print(f)},
            {"kind", formula_kind(f)},
            {"degree", ord::render_cnf(game::degree(f))},
        };
        if (f.is_literal()) entry["true"] = fol::eval_atomic(f);
        board.push_back(std::move(entry));
    }
    json moves = json::array();
    for (const auto& m : game::legal_moves(s)) moves.push_back(game::to_string(m));
    auto win = game::win_check(s);
    return {
        {"board", board},
        {"bound", s.bound},
        {"turn", std::string(game::to_string(s.turn))},
        {"pending", s.pending ? json(*s.pending) : json(nullptr)},
        {"board_degree", ord::render_cnf(game::board_degree(s))},
        {"legal_moves", moves},
        {"win_index", win ? json(*win) : json(nullptr)},
    };
}

json to_json(const game::Move& m) {
    json j = {{"kind", move_kind(m.kind)}, {"text", game::to_string(m)}};
    if (m.kind != game::Move::Kind::Answer) j["index"] = m.index;
    if (m.kind == game::Move::Kind::Witness || m.kind == game::Move::Kind::Answer) j["value"] = m.value;
    return j;
}

json to_json(const game::Trace& t) {
    json moves = json::array();
    for (const auto& m : t.moves) moves.push_back(to_json(m));
    json states = json::array(), boards = json::array(), degrees = json::array();
    for (const auto& s : t.states) {
        states.push_back(to_json(s));
        json b = json::array();
        for (const auto& f : s.board) b.push_back(fol::print(f));
        boards.push_back(std::move(b));
        degrees.push_back(ord::render_brackets(game::board_degree(s)));
    }
    return {
        {"bound", t.bound},
        {"outcome", std::string(game::to_string(t.outcome))},
        {"culprit", t.culprit ? json(std::string(game::to_string(*t.culprit))) : json(nullptr)},
        {"win_index", t.win_index ? json(*t.win_index) : json(nullptr)},
        {"reason", t.reason},
        {"moves", moves},
        {"boards", boards},
        {"degrees", degrees},
        {"states", states},
    };
}

json to_json(const game::StrategyTree& tree) {
    json j;
    j["measure"] = ord::render_cnf(tree->measure);
    j["board"] = json::array();
    for (const auto& f : tree->state.board) j["board"].push_back(fol::print(f));
    switch (tree->kind) {
        case game::StrategyNode::Kind::WinLeaf:
            j["node"] = "win";
            j["index"] = tree->index;
            break;
        case game::StrategyNode::Kind::Proponent:
            j["node"] = "proponent";
            j["move"] = game::to_string(tree->move);
            break;
        case game::StrategyNode::Kind::Adversary:
            j["node"] = "adversary";
            j["index"] = tree->index;
            break;
    }
    if (!tree->children.empty()) {
        j["children"] = json::array();
        for (const auto& c : tree->children) j["children"].push_back(to_json(c));
    }
    return j;
}

json to_json(const proof::Proof& p) {
    json steps = json::array();
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
        steps.push_back({
            {"n", k + 1},
            {"formula", fol::print(p.steps[k].formula)},
            {"justification", proof::to_string(p.steps[k].why)},
        });
    }
    return steps;
}

json to_json(const ProofCheckReport& r) {
    json j = {
        {"ok", !r.error},
        {"steps", r.proof.steps.size()},
        {"length", proof::proof_length(r.proof, r.metric)},
        {"metric", metric_name(r.metric)},
    };
    if (!r.proof.empty()) {
        j["conclusion"] = fol::print(r.proof.conclusion());
        j["contradiction"] = proof::is_contradiction(r.proof.conclusion());
    }
    if (r.error) j["error"] = {{"step", r.error->step}, {"reason", r.error->reason}};
    return j;
}

json to_json(const SearchReport& r) {
    json j = {
        {"max_length", r.max_length},
        {"ceiling", r.ceiling},
        {"metric", metric_name(r.metric)},
        {"verdict", r.found ? "CONTRADICTION-FOUND" : "CON-VERIFIED"},
        {"nodes", r.stats.nodes},
        {"elapsed_ms", r.stats.elapsed.count()},
    };
    if (r.found) {
        j["proof"] = to_json(*r.found);
        j["length"] = proof::proof_length(*r.found, r.metric);
    }
    return j;
}

game::Move move_from_json(const json& j) {
    if (j.is_string()) return game::parse_move(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw std::invalid_argument("a move is a string or an object with a \"kind\"");
    }
    auto field = [&](const char* name) -> std::uint64_t {
        if (!j.contains(name) || !(j[name].is_number_unsigned() || (j[name].is_number_integer() && j[name].get<std::int64_t>() >= 0))) {
            throw std::invalid_argument(std::string("move field \"") + name + "\" must be a non-negative integer");
        }
        return j[name].get<std::uint64_t>();
    };
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "or-left") return game::Move::or_left(field("index"));
    if (kind == "or-right") return game::Move::or_right(field("index"));
    if (kind == "witness") return game::Move::witness(field("index"), field("value"));
    if (kind == "point") return game::Move::point_at(field("index"));
    if (kind == "answer") return game::Move::answer(field("value"));
    throw std::invalid_argument("unknown move kind '" + kind + "'");
}

}  // namespace gentzen::report
