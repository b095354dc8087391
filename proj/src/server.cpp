#include "gentzen/server.hpp"

#include <httplib.h>

namespace gentzen::service {

namespace {

void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

template <class F>
void guarded(httplib::Response& res, F&& f) {
    try {
        send(res, 200, f());
    } catch (const ServiceError& e) {
        json body = {{"error", e.what()}};
        if (!e.detail().is_null()) body["current"] = e.detail();
        send(res, e.status(), body);
    } catch (const json::exception& e) {
        send(res, 400, {{"error", std::string("malformed JSON: ") + e.what()}});
    } catch (const std::exception& e) {
        send(res, 500, {{"error", e.what()}});
    }
}

json body_of(const httplib::Request& req) { return req.body.empty() ? json::object() : json::parse(req.body); }

}  // namespace

void install_routes(httplib::Server& server, GameService& games, const std::optional<std::string>& static_dir) {
    server.Post("/api/game", [&games](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { return games.create(body_of(req)); });
    });
    server.Get(R"(/api/game/([^/]+))", [&games](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { return games.view(req.matches[1]); });
    });
    server.Post(R"(/api/game/([^/]+)/move)", [&games](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { return games.move(req.matches[1], body_of(req)); });
    });
    server.Get(R"(/api/game/([^/]+)/hint)", [&games](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { return games.hint(req.matches[1]); });
    });
    if (static_dir) server.set_mount_point("/", *static_dir);
}

bool serve(GameService& games, const std::string& host, int port, const std::optional<std::string>& static_dir) {
    httplib::Server server;
    install_routes(server, games, static_dir);
    return server.listen(host, port);
}

}  // namespace gentzen::service
