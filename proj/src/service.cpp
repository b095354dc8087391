#include "gentzen/service.hpp"

#include <utility>

#include "gentzen/arith.hpp"

namespace gentzen::service {

namespace {

bool is_natural(const json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0); }

std::string status_of(const game::GameState& s) {
    if (game::win_check(s)) return "won";
    if (game::legal_moves(s).empty()) return "stuck";
    return "playing";
}

}  // namespace

json GameService::render(const Game& g) const {
    json history = json::array();
    for (const auto& p : g.history) {
        json m = report::to_json(p.move);
        m["player"] = std::string(game::to_string(p.player));
        history.push_back(std::move(m));
    }
    return {
        {"game_id", g.id},
        {"version", g.version},
        {"sentence", g.sentence},
        {"status", status_of(g.state)},
        {"state", report::to_json(g.state)},
        {"history", history},
    };
}

const GameService::Game& GameService::find(const std::string& id) const {
    auto it = games_.find(id);
    if (it == games_.end()) throw ServiceError(404, "no game with id '" + id + "'");
    return it->second;
}

GameService::Game& GameService::find(const std::string& id) {
    return const_cast<Game&>(std::as_const(*this).find(id));
}

json GameService::create(const json& body) {
    if (!body.is_object() || !body.contains("sentence") || !body["sentence"].is_string()) {
        throw ServiceError(400, "expected {\"sentence\": string, \"bound\": integer}");
    }
    if (!body.contains("bound") || !is_natural(body["bound"])) {
        throw ServiceError(400, "\"bound\" must be a non-negative integer");
    }
    const auto bound = body["bound"].get<fol::Natural>();
    if (bound > options_.max_bound) {
        throw ServiceError(400, "bound " + std::to_string(bound) + " exceeds the limit " + std::to_string(options_.max_bound));
    }
    fol::Formula f;
    try {
        f = fol::parse_formula(body["sentence"].get<std::string>());
    } catch (const fol::SyntaxError& e) {
        throw ServiceError(400, e.what());
    }
    if (!fol::is_sentence(f)) throw ServiceError(400, "the formula has free variables");

    Game g;
    g.sentence = fol::print(f);
    g.state = game::GameState::initial({fol::nnf(f)}, bound);

    std::lock_guard lock(mutex_);
    if (games_.size() >= options_.max_games) games_.erase(games_.begin());
    g.id = std::to_string(next_id_++);
    auto [it, ok] = games_.emplace(g.id, std::move(g));
    return render(it->second);
}

json GameService::view(const std::string& id) const {
    std::lock_guard lock(mutex_);
    return render(find(id));
}

json GameService::move(const std::string& id, const json& body) {
    std::lock_guard lock(mutex_);
    Game& g = find(id);
    if (!body.is_object() || !body.contains("move")) throw ServiceError(400, "expected {\"move\": ...}");
    if (body.contains("version")) {
        if (!is_natural(body["version"]) || body["version"].get<std::uint64_t>() != g.version) {
            throw ServiceError(409, "stale view: the game is at version " + std::to_string(g.version), render(g));
        }
    }
    game::Move m;
    try {
        m = report::move_from_json(body["move"]);
    } catch (const std::invalid_argument& e) {
        throw ServiceError(400, e.what());
    }
    if (game::win_check(g.state)) throw ServiceError(409, "the game is already won", render(g));

    game::GameState next;
    try {
        next = game::apply_move(g.state, m);
    } catch (const game::IllegalMove& e) {
        throw ServiceError(409, e.what(), render(g));
    }
    g.history.push_back({game::Player::Proponent, m});
    if (next.turn == game::Player::Adversary) {
        game::Move reply = game::adversary_reply(next);
        next = game::apply_move(next, reply);
        g.history.push_back({game::Player::Adversary, reply});
    }
    g.state = std::move(next);
    ++g.version;
    return render(g);
}

json GameService::hint(const std::string& id) const {
    game::GameState state;
    {
        std::lock_guard lock(mutex_);
        state = find(id).state;
    }
    if (auto w = game::win_check(state)) {
        return {{"available", true}, {"move", nullptr}, {"message", "claim win at index " + std::to_string(*w)}};
    }
    auto tree = game::synthesize_reduction(state, game::default_depth_budget(state));
    if (!tree) return {{"available", false}, {"move", nullptr}, {"message", "no reduction found"}};
    auto m = game::root_move(*tree);
    return {{"available", true}, {"move", report::to_json(*m)}, {"message", game::to_string(*m)}};
}

}  // namespace gentzen::service
