#include "doctest.h"

#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "gentzen/server.hpp"

using namespace gentzen;
using service::json;

namespace {

// A server on an ephemeral localhost port for the lifetime of the object.
class LiveServer {
public:
    explicit LiveServer(std::optional<std::string> static_dir = std::nullopt) {
        service::install_routes(server_, games_, static_dir);
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~LiveServer() {
        server_.stop();
        thread_.join();
    }

    httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

private:
    service::GameService games_;
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

json post(httplib::Client& c, const std::string& path, const json& body, int expect) {
    auto res = c.Post(path, body.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == expect);
    CHECK(res->get_header_value("Content-Type") == "application/json");
    return json::parse(res->body);
}

json get(httplib::Client& c, const std::string& path, int expect) {
    auto res = c.Get(path);
    REQUIRE(res);
    CHECK(res->status == expect);
    return json::parse(res->body);
}

}  // namespace

TEST_CASE("play a game over http") {
    LiveServer live;
    auto c = live.client();

    json g = post(c, "/api/game", {{"sentence", "exists x. x + x = SS0"}, {"bound", 2}}, 200);
    const std::string id = g["game_id"];
    CHECK(g["state"]["legal_moves"].size() == 3);
    CHECK(get(c, "/api/game/" + id, 200) == g);

    json hint = get(c, "/api/game/" + id + "/hint", 200);
    CHECK(hint["message"] == "witness 0 1");

    json bad = post(c, "/api/game/" + id + "/move", {{"move", "witness 0 5"}}, 409);
    CHECK(bad["error"].get<std::string>().size() > 0);
    CHECK(bad["current"]["version"] == 0);

    json won = post(c, "/api/game/" + id + "/move", {{"move", "witness 0 1"}, {"version", 0}}, 200);
    CHECK(won["status"] == "won");

    json stale = post(c, "/api/game/" + id + "/move", {{"move", "witness 0 0"}, {"version", 0}}, 409);
    CHECK(stale["current"]["version"] == 1);
}

TEST_CASE("adversary answers over http") {
    LiveServer live;
    auto c = live.client();
    json g = post(c, "/api/game", {{"sentence", "0 = 0 & !(0 = 0)"}, {"bound", 1}}, 200);
    json after = post(c, "/api/game/" + g["game_id"].get<std::string>() + "/move", {{"move", {{"kind", "point"}, {"index", 0}}}}, 200);
    CHECK(after["state"]["board"].size() == 1);
    CHECK(after["state"]["board"][0]["true"] == false);
    CHECK(after["history"][1]["player"] == "adversary");
    CHECK(after["status"] == "stuck");
}

TEST_CASE("http errors") {
    LiveServer live;
    auto c = live.client();
    get(c, "/api/game/99", 404);
    get(c, "/api/game/99/hint", 404);
    post(c, "/api/game/99/move", {{"move", "point 0"}}, 404);
    post(c, "/api/game", {{"sentence", "0 = "}, {"bound", 1}}, 400);

    auto res = c.Post("/api/game", "{not json", "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);

    json s = post(c, "/api/game", {{"sentence", "0 = S0"}, {"bound", 1}}, 200);
    CHECK(s["status"] == "stuck");
    CHECK(get(c, "/api/game/" + s["game_id"].get<std::string>() + "/hint", 200)["available"] == false);
}

TEST_CASE("static files") {
    auto dir = std::filesystem::temp_directory_path() / "gentzen_static_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "index.html") << "<html>board</html>";
    {
        LiveServer live(dir.string());
        auto c = live.client();
        auto res = c.Get("/index.html");
        REQUIRE(res);
        CHECK(res->status == 200);
        CHECK(res->body == "<html>board</html>");
        get(c, "/api/game/1", 404);
    }
    std::filesystem::remove_all(dir);
}
