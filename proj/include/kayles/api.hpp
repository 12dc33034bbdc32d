#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "kayles/oracle.hpp"
#include "kayles/session.hpp"

namespace kayles {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// JSON facade used by the web front end. handle() is transport-free so it
/// can be tested without sockets; serve() binds it to HTTP.
class ApiService {
 public:
  explicit ApiService(Oracle& oracle = shared_oracle(),
                      SessionStore::Clock::duration ttl = std::chrono::hours(1));

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body);

  SessionStore& sessions() { return store_; }

 private:
  ApiResponse variants() const;
  ApiResponse outcome(const nlohmann::json& req);
  ApiResponse best_move(const nlohmann::json& req);
  ApiResponse create_game(const nlohmann::json& req);
  ApiResponse get_game(const std::string& id);
  ApiResponse play(const std::string& id, const nlohmann::json& req);

  void engine_turns(GameSession& s, nlohmann::json& replies);

  Oracle& oracle_;
  SessionStore store_;
};

nlohmann::json to_json(const Position& p);
nlohmann::json to_json(const CompoundMove& m);

/// Blocks serving handle() on host:port. Returns false if the bind fails.
bool serve(ApiService& api, const std::string& host, int port);

}  // namespace kayles
