#include "doctest.h"

#include "gentzen/game.hpp"
#include "gentzen/proof.hpp"
#include "gentzen/report.hpp"
#include "gentzen/service.hpp"

using namespace gentzen;
using service::GameService;
using service::json;
using service::ServiceError;

namespace {

int status_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ServiceError& e) {
        return e.status();
    }
    return 200;
}

std::string canon(const char* text) { return fol::print(fol::parse_formula(text)); }

std::vector<std::string> board_texts(const json& view) {
    std::vector<std::string> out;
    for (const auto& e : view["state"]["board"]) out.push_back(e["text"]);
    return out;
}

}  // namespace

TEST_CASE("create and win with a witness") {
    GameService games;
    json g = games.create({{"sentence", "exists x. x + x = SS0"}, {"bound", 2}});
    CHECK(g["status"] == "playing");
    CHECK(g["version"] == 0);
    CHECK(g["state"]["bound"] == 2);
    CHECK(g["state"]["turn"] == "proponent");
    CHECK(board_texts(g) == std::vector<std::string>{canon("exists x. x + x = SS0")});

    const std::string id = g["game_id"];
    json after = games.move(id, {{"move", "witness 0 1"}, {"version", 0}});
    CHECK(after["status"] == "won");
    CHECK(after["version"] == 1);
    CHECK(after["state"]["win_index"] == 1);
    CHECK(after["state"]["board"][1]["text"] == canon("S0 + S0 = SS0"));
    CHECK(after["state"]["board"][1]["true"] == true);
    REQUIRE(after["history"].size() == 1);
    CHECK(after["history"][0]["player"] == "proponent");
    CHECK(games.view(id) == after);
}

TEST_CASE("a wrong witness is legal but does not win") {
    GameService games;
    std::string id = games.create({{"sentence", "exists x. x + x = SS0"}, {"bound", 2}})["game_id"];
    json after = games.move(id, {{"move", {{"kind", "witness"}, {"index", 0}, {"value", 2}}}});
    CHECK(after["status"] == "playing");
    CHECK(after["state"]["board"].size() == 2);
}

TEST_CASE("pointing at a conjunction brings the adversary's answer") {
    GameService games;
    std::string id = games.create({{"sentence", "0 = 0 & 0 = S0"}, {"bound", 1}})["game_id"];
    json after = games.move(id, {{"move", "point 0"}});
    REQUIRE(after["history"].size() == 2);
    CHECK(after["history"][1]["player"] == "adversary");
    CHECK(after["history"][1]["kind"] == "answer");
    // The engine keeps the false conjunct.
    CHECK(board_texts(after) == std::vector<std::string>{canon("0 = S0")});
    CHECK(after["status"] == "stuck");
    CHECK(after["state"]["turn"] == "proponent");
}

TEST_CASE("the adversary answers a universal with a counterexample") {
    GameService games;
    std::string id = games.create({{"sentence", "forall x. x = 0"}, {"bound", 2}})["game_id"];
    json after = games.move(id, {{"move", "point 0"}});
    auto board = board_texts(after);
    REQUIRE(board.size() == 1);
    CHECK(board[0] != canon("0 = 0"));
    CHECK(after["state"]["board"][0]["true"] == false);
}

TEST_CASE("request errors") {
    GameService games;
    CHECK(status_of([&] { games.view("42"); }) == 404);
    CHECK(status_of([&] { games.create({{"sentence", "x = 0"}, {"bound", 1}}); }) == 400);
    CHECK(status_of([&] { games.create({{"sentence", "0 = "}, {"bound", 1}}); }) == 400);
    CHECK(status_of([&] { games.create({{"sentence", "0 = 0"}, {"bound", 13}}); }) == 400);
    CHECK(status_of([&] { games.create({{"sentence", "0 = 0"}, {"bound", -1}}); }) == 400);
    CHECK(status_of([&] { games.create({{"bound", 1}}); }) == 400);
    CHECK(status_of([&] { games.create(json::array()); }) == 400);

    std::string id = games.create({{"sentence", "exists x. x + x = SS0"}, {"bound", 2}})["game_id"];
    CHECK(status_of([&] { games.move(id, {{"move", "witness 0 5"}}); }) == 409);
    CHECK(status_of([&] { games.move(id, {{"move", "point 3"}}); }) == 409);
    CHECK(status_of([&] { games.move(id, {{"move", "jump"}}); }) == 400);
    CHECK(status_of([&] { games.move(id, {{"mv", "point 0"}}); }) == 400);
    CHECK(status_of([&] { games.move(id, {{"move", "witness 0 1"}, {"version", 7}}); }) == 409);
    CHECK(games.view(id)["version"] == 0);

    games.move(id, {{"move", "witness 0 1"}, {"version", 0}});
    CHECK(status_of([&] { games.move(id, {{"move", "witness 0 0"}}); }) == 409);
}

TEST_CASE("conflicts carry the current view") {
    GameService games;
    std::string id = games.create({{"sentence", "0 = 0 | 0 = S0"}, {"bound", 1}})["game_id"];
    try {
        games.move(id, {{"move", "or-left 0"}, {"version", 3}});
        FAIL("expected a conflict");
    } catch (const ServiceError& e) {
        CHECK(e.status() == 409);
        CHECK(e.detail()["game_id"] == id);
        CHECK(e.detail()["version"] == 0);
    }
}

TEST_CASE("server moves agree with the engine's legal moves") {
    GameService games;
    json g = games.create({{"sentence", "(exists x. x = S0) | forall y. y = y"}, {"bound", 1}});
    auto s = game::GameState::initial({fol::nnf(fol::parse_formula("(exists x. x = S0) | forall y. y = y"))}, 1);
    std::vector<std::string> engine;
    for (const auto& m : game::legal_moves(s)) engine.push_back(game::to_string(m));
    CHECK(g["state"]["legal_moves"].get<std::vector<std::string>>() == engine);

    std::string id = g["game_id"];
    for (const auto& m : engine) {
        std::string fresh = games.create({{"sentence", "(exists x. x = S0) | forall y. y = y"}, {"bound", 1}})["game_id"];
        CHECK(status_of([&] { games.move(fresh, {{"move", m}}); }) == 200);
    }
    CHECK(status_of([&] { games.move(id, {{"move", "answer 0"}}); }) == 409);
}

TEST_CASE("hints") {
    GameService games;
    std::string a = games.create({{"sentence", "exists x. x + x = SS0"}, {"bound", 2}})["game_id"];
    json h = games.hint(a);
    CHECK(h["available"] == true);
    CHECK(h["message"] == "witness 0 1");
    CHECK(h["move"]["kind"] == "witness");

    std::string b = games.create({{"sentence", "S0 = S0"}, {"bound", 1}})["game_id"];
    CHECK(games.view(b)["status"] == "won");
    CHECK(games.hint(b)["message"] == "claim win at index 0");

    std::string c = games.create({{"sentence", "0 = S0"}, {"bound", 1}})["game_id"];
    CHECK(games.view(c)["status"] == "stuck");
    CHECK(games.hint(c)["available"] == false);
    CHECK(status_of([&] { games.hint("nope"); }) == 404);
}

TEST_CASE("old games are dropped past the limit") {
    GameService games({12, 2});
    std::string first = games.create({{"sentence", "0 = 0"}, {"bound", 0}})["game_id"];
    games.create({{"sentence", "0 = 0"}, {"bound", 0}});
    games.create({{"sentence", "0 = 0"}, {"bound", 0}});
    CHECK(status_of([&] { games.view(first); }) == 404);
}

TEST_CASE("trace documents") {
    json doc = report::trace_document("ordinal compare", {{"a", "[]"}}, "ordinal-compare", {{"result", "EQ"}});
    CHECK(doc["schema_version"] == report::kSchemaVersion);
    CHECK(doc["invocation"]["command"] == "ordinal compare");
    CHECK(doc["kind"] == "ordinal-compare");
    CHECK(doc["payload"]["result"] == "EQ");
}

TEST_CASE("game trace json") {
    auto s = game::GameState::initial({fol::nnf(fol::parse_formula("exists x. x = S0"))}, 1);
    game::Strategy pro = [](const game::GameState&) -> std::optional<game::Move> { return game::Move::witness(0, 1); };
    game::Strategy adv = [](const game::GameState& st) -> std::optional<game::Move> { return game::adversary_reply(st); };
    json t = report::to_json(game::play(s, pro, adv, 4));
    CHECK(t["outcome"] == "win");
    CHECK(t["bound"] == 1);
    CHECK(t["moves"].size() == 1);
    CHECK(t["boards"].size() == 2);
    CHECK(t["boards"][1][1] == canon("S0 = S0"));
    CHECK(t["degrees"][0] == "[[]]");
    CHECK(t["states"].size() == 2);
}

TEST_CASE("move json") {
    using game::Move;
    CHECK(report::move_from_json("point 2") == Move::point_at(2));
    CHECK(report::move_from_json({{"kind", "or-right"}, {"index", 1}}) == Move::or_right(1));
    CHECK(report::move_from_json({{"kind", "answer"}, {"value", 3}}) == Move::answer(3));
    CHECK_THROWS_AS(report::move_from_json({{"kind", "witness"}, {"index", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(report::move_from_json(5), std::invalid_argument);
    for (const Move& m : {Move::or_left(0), Move::witness(1, 4), Move::answer(0), Move::point_at(3)}) {
        CHECK(report::move_from_json(report::to_json(m)) == m);
    }
}

TEST_CASE("search report json") {
    proof::CalculusProfile bogus;
    bogus.extra_axioms.push_back(fol::parse_formula("0 = 0 & !(0 = 0)"));
    report::SearchReport r;
    r.max_length = 20;
    r.found = proof::search_contradiction(20, bogus);
    json j = report::to_json(r);
    CHECK(j["verdict"] == "CONTRADICTION-FOUND");
    CHECK(j["length"] == 14);
    CHECK(j["proof"][0]["justification"] == "extra 1");

    report::SearchReport none;
    none.max_length = 5;
    CHECK(report::to_json(none)["verdict"] == "CON-VERIFIED");
    CHECK_FALSE(report::to_json(none).contains("proof"));
}
