#pragma once

// In-memory game sessions behind the HTTP API.  The engine answers for the
// adversary as soon as the proponent points at a sentence.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentzen/report.hpp"

namespace gentzen::service {

using nlohmann::json;

class ServiceError : public std::runtime_error {
public:
    ServiceError(int status, const std::string& what, json detail = nullptr)
        : std::runtime_error(what), status_(status), detail_(std::move(detail)) {}
    int status() const { return status_; }
    const json& detail() const { return detail_; }

private:
    int status_;
    json detail_;
};

struct ServiceOptions {
    fol::Natural max_bound = 12;
    std::size_t max_games = 1000;
};

class GameService {
public:
    explicit GameService(ServiceOptions options = {}) : options_(options) {}

    // {"sentence": text, "bound": n} -> game view.  400 on bad input.
    json create(const json& body);
    // 404 for an unknown id.
    json view(const std::string& id) const;
    // {"move": "point 0" | {...}, "version": n}.  409 for an illegal move,
    // a finished game or a stale version; the error detail carries the
    // current view.
    json move(const std::string& id, const json& body);
    // The proponent's next move from a synthesized reduction, if any.
    json hint(const std::string& id) const;

private:
    struct Played {
        game::Player player;
        game::Move move;
    };
    struct Game {
        std::string id;
        std::string sentence;
        game::GameState state;
        std::uint64_t version = 0;
        std::vector<Played> history;
    };

    json render(const Game& g) const;
    const Game& find(const std::string& id) const;
    Game& find(const std::string& id);

    ServiceOptions options_;
    mutable std::mutex mutex_;
    std::map<std::string, Game> games_;
    std::uint64_t next_id_ = 1;
};

}  // namespace gentzen::service
