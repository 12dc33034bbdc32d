#include "kayles/api.hpp"

#include "httplib.h"
#include "kayles/error.hpp"
#include "kayles/solver.hpp"

namespace kayles {

using nlohmann::json;

namespace {

// Inputs beyond these sizes are refused rather than computed.
constexpr PathLen kMaxPart = 100000;
constexpr std::size_t kMaxComponents = 64;
constexpr PathLen kMaxForeclosedMisere = 20000;

struct BadRequest {
  int status;
  std::string code;
  std::string reason;
};

ApiResponse error(int status, const std::string& code, const std::string& reason) {
  return {status, json{{"error", code}, {"reason", reason}}};
}

const char* rule_name(MoveRule r) {
  switch (r) {
    case MoveRule::Disjunctive: return "disjunctive";
    case MoveRule::Conjunctive: return "conjunctive";
    case MoveRule::Selective: return "selective";
  }
  return "?";
}

json value_json(const GameValue& v) {
  if (v.is_star()) return "*";
  return v.value();
}

Variant read_variant(const json& req) {
  if (!req.contains("variant") || !req["variant"].is_string()) {
    throw BadRequest{400, "malformed", "missing string field 'variant'"};
  }
  try {
    return parse_variant(req["variant"].get<std::string>());
  } catch (const Error& e) {
    throw BadRequest{400, "malformed", e.what()};
  }
}

Position read_position(const json& req, Variant v) {
  if (!req.contains("position")) throw BadRequest{400, "malformed", "missing field 'position'"};
  const json& raw = req["position"];
  Position p;
  try {
    if (raw.is_string()) {
      p = parse_position(raw.get<std::string>());
    } else if (raw.is_array()) {
      std::vector<PathLen> lengths;
      for (const auto& x : raw) {
        if (!x.is_number_integer()) throw BadRequest{400, "malformed", "path lengths must be integers"};
        const auto n = x.get<long long>();
        if (n > kMaxPart) throw BadRequest{422, "bound-exceeded", "path length too large"};
        lengths.push_back(static_cast<PathLen>(n));
      }
      p = Position::from_lengths(lengths);
    } else {
      throw BadRequest{400, "malformed", "'position' must be an array of integers"};
    }
  } catch (const Error& e) {
    throw BadRequest{400, "malformed", e.what()};
  }
  if (p.size() > kMaxComponents || p.largest() > kMaxPart) {
    throw BadRequest{422, "bound-exceeded", "position too large"};
  }
  if (v.move_rule == MoveRule::Disjunctive && v.ending == Ending::Short &&
      v.play == Play::Misere && p.largest() > kMaxForeclosedMisere) {
    throw BadRequest{422, "bound-exceeded",
                     "misere foreclosed values are served up to P_" +
                         std::to_string(kMaxForeclosedMisere)};
  }
  return p;
}

CompoundMove read_move(const json& req) {
  if (!req.contains("move") || !req["move"].is_array()) {
    throw BadRequest{400, "malformed", "'move' must be an array of {component_index, vertex}"};
  }
  CompoundMove m;
  for (const auto& c : req["move"]) {
    if (!c.is_object() || !c.contains("component_index") || !c.contains("vertex") ||
        !c["component_index"].is_number_integer() || !c["vertex"].is_number_integer()) {
      throw BadRequest{400, "malformed", "each choice needs integer component_index and vertex"};
    }
    const auto idx = c["component_index"].get<long long>();
    if (idx < 0) throw BadRequest{400, "malformed", "negative component_index"};
    m.choices.push_back({static_cast<std::size_t>(idx), c["vertex"].get<int>()});
  }
  return m;
}

json session_json(const GameSession& s) {
  json history = json::array();
  for (const auto& t : s.history) {
    history.push_back({{"mover", to_string(t.mover)}, {"move", to_json(t.move)}});
  }
  return {{"id", s.id},
          {"variant", s.variant.name()},
          {"initial", to_json(s.initial)},
          {"position", to_json(s.position)},
          {"status", s.finished ? "finished" : "ongoing"},
          {"winner", s.finished ? json(to_string(s.winner)) : json(nullptr)},
          {"to_move", to_string(s.to_move)},
          {"history", history}};
}

bool within_oracle(const Position& p, const Oracle& oracle) {
  return p.total() <= oracle.config().max_total &&
         static_cast<int>(p.size()) <= oracle.config().max_components;
}

}  // namespace

json to_json(const Position& p) { return p.parts(); }

json to_json(const CompoundMove& m) {
  json out = json::array();
  for (const auto& c : m.choices) {
    out.push_back({{"component_index", c.component}, {"vertex", c.vertex}});
  }
  return out;
}

ApiService::ApiService(Oracle& oracle, SessionStore::Clock::duration ttl)
    : oracle_(oracle), store_(ttl) {}

ApiResponse ApiService::handle(std::string_view method, std::string_view path,
                               std::string_view body) {
  try {
    const std::string p(path);
    const std::string prefix = "/api/games/";
    json req = json::object();
    if (method == "POST") {
      req = json::parse(body.empty() ? std::string_view("{}") : body, nullptr, false);
      if (req.is_discarded() || !req.is_object()) {
        return error(400, "malformed", "request body must be a JSON object");
      }
    }

    if (p == "/api/variants") {
      return method == "GET" ? variants() : error(405, "method-not-allowed", "use GET");
    }
    if (p == "/api/outcome") {
      return method == "POST" ? outcome(req) : error(405, "method-not-allowed", "use POST");
    }
    if (p == "/api/best-move") {
      return method == "POST" ? best_move(req) : error(405, "method-not-allowed", "use POST");
    }
    if (p == "/api/games") {
      return method == "POST" ? create_game(req) : error(405, "method-not-allowed", "use POST");
    }
    if (p.rfind(prefix, 0) == 0) {
      std::string rest = p.substr(prefix.size());
      const auto slash = rest.find('/');
      if (slash == std::string::npos) {
        return method == "GET" ? get_game(rest) : error(405, "method-not-allowed", "use GET");
      }
      if (rest.substr(slash) == "/play") {
        return method == "POST" ? play(rest.substr(0, slash), req)
                                : error(405, "method-not-allowed", "use POST");
      }
    }
    return error(404, "not-found", "no route for " + p);
  } catch (const BadRequest& b) {
    return error(b.status, b.code, b.reason);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::BoundExceeded:
      case ErrorKind::InsufficientData:
        return error(422, "bound-exceeded", e.what());
      case ErrorKind::IllegalMove:
      case ErrorKind::NoMoves:
        return error(409, "illegal-move", e.what());
      default:
        return error(400, "malformed", e.what());
    }
  }
}

ApiResponse ApiService::variants() const {
  json out = json::array();
  for (const auto& v : all_variants()) {
    out.push_back({{"name", v.name()},
                   {"conway_name", v.conway_name()},
                   {"move_rule", rule_name(v.move_rule)},
                   {"ending", v.ending == Ending::Long ? "long" : "short"},
                   {"play", v.play == Play::Normal ? "normal" : "misere"},
                   {"solved", has_solver(v)},
                   {"certified", is_certified(v)}});
  }
  return {200, out};
}

ApiResponse ApiService::outcome(const json& req) {
  const Variant v = read_variant(req);
  const Position p = read_position(req, v);
  const Analysis a = analyze(v, p, oracle_);
  json detail = json::object();
  if (a.measure == "sigma") {
    json sig = json::array();
    for (const auto& c : a.components) sig.push_back(value_json(c));
    detail["sigma"] = sig;
  } else if (a.value) {
    detail[a.measure] = value_json(*a.value);
  } else {
    detail[a.measure] = "exhaustive";
  }
  if (a.immediate_end) detail["immediate_end"] = true;
  return {200, json{{"variant", v.name()},
                    {"position", to_json(p)},
                    {"outcome", std::string(1, to_char(a.outcome))},
                    {"detail", detail},
                    {"summary", a.summary()}}};
}

ApiResponse ApiService::best_move(const json& req) {
  const Variant v = read_variant(req);
  const Position p = read_position(req, v);
  if (p.empty()) return error(409, "game-over", "no moves from the empty position");
  if (!has_solver(v) && !within_oracle(p, oracle_)) {
    return error(422, "bound-exceeded", v.name() + " is only solved within the oracle bound");
  }
  const CompoundMove m = engine_move(v, p, oracle_);
  const Transition t = apply_move(p, m, v.move_rule);
  return {200, json{{"variant", v.name()},
                    {"position", to_json(p)},
                    {"move", to_json(m)},
                    {"successor", to_json(t.successor)},
                    {"ends_game", ends_game(t, v.ending)},
                    {"winning", analyze(v, p, oracle_).outcome == Outcome::N}}};
}

void ApiService::engine_turns(GameSession& s, json& reply) {
  if (s.finished || s.to_move != Side::Engine) return;
  const CompoundMove m = engine_move(s.variant, s.position, oracle_);
  play_turn(s, m);
  reply = to_json(m);
}

ApiResponse ApiService::create_game(const json& req) {
  const Variant v = read_variant(req);
  const Position p = read_position(req, v);
  Side first = Side::Human;
  if (req.contains("engine")) {
    const json& e = req["engine"];
    if (e == "first") {
      first = Side::Engine;
    } else if (e != "second") {
      throw BadRequest{400, "malformed", "'engine' must be \"first\" or \"second\""};
    }
  }
  if (!has_solver(v) && !within_oracle(p, oracle_)) {
    return error(422, "bound-exceeded",
                 v.name() + " games are limited to " +
                     std::to_string(oracle_.config().max_total) + " vertices");
  }
  auto entry = store_.create(v, p, first);
  std::lock_guard lock(entry->mutex);
  json reply = nullptr;
  engine_turns(entry->session, reply);
  json out = session_json(entry->session);
  out["engine_reply"] = reply;
  return {201, out};
}

ApiResponse ApiService::get_game(const std::string& id) {
  auto entry = store_.find(id);
  if (!entry) return error(404, "unknown-session", "no session " + id);
  std::lock_guard lock(entry->mutex);
  return {200, session_json(entry->session)};
}

ApiResponse ApiService::play(const std::string& id, const json& req) {
  auto entry = store_.find(id);
  if (!entry) return error(404, "unknown-session", "no session " + id);
  const CompoundMove m = read_move(req);
  std::lock_guard lock(entry->mutex);
  GameSession& s = entry->session;
  if (s.finished) return error(409, "game-over", "the game is over");
  const std::string why = move_violation(s.position, m, s.variant.move_rule);
  if (!why.empty()) {
    std::string detail;
    try {
      apply_move(s.position, m, s.variant.move_rule);
    } catch (const Error& e) {
      detail = e.what();
    }
    return {409, json{{"error", "illegal-move"}, {"reason", why}, {"message", detail}}};
  }
  play_turn(s, m);
  json reply = nullptr;
  engine_turns(s, reply);
  json out = session_json(s);
  out["engine_reply"] = reply;
  return {200, out};
}

bool serve(ApiService& api, const std::string& host, int port) {
  httplib::Server server;
  auto dispatch = [&api](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse r = api.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(".*", dispatch);
  server.Post(".*", dispatch);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  return server.listen(host, port);
}

}  // namespace kayles
