#pragma once

#include <optional>
#include <string>

#include "gentzen/service.hpp"

namespace httplib {
class Server;
}

namespace gentzen::service {

// Registers the /api/game routes and, when static_dir is set, serves the
// built UI from it.
void install_routes(httplib::Server& server, GameService& games, const std::optional<std::string>& static_dir);

// Blocks until the server stops.  Returns false when the port cannot be
// bound.
bool serve(GameService& games, const std::string& host, int port, const std::optional<std::string>& static_dir);

}  // namespace gentzen::service
