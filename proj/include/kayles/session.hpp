#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kayles/oracle.hpp"
#include "kayles/position.hpp"
#include "kayles/variant.hpp"

namespace kayles {

enum class Side { Human, Engine };

inline Side other(Side s) { return s == Side::Human ? Side::Engine : Side::Human; }
const char* to_string(Side s);

struct Turn {
  Side mover = Side::Human;
  CompoundMove move;
};

struct GameSession {
  std::string id;
  Variant variant;
  Position initial;
  Side first = Side::Human;
  Position position;
  Side to_move = Side::Human;
  std::vector<Turn> history;
  bool finished = false;
  Side winner = Side::Human;  // meaningful once finished
};

/// Fresh session; an empty start position is finished at once.
GameSession start_session(std::string id, Variant v, Position initial, Side first);

/// Applies one move by the side to move and settles the game if it ended.
/// Throws IllegalMove when the game is over or the move breaks the rule.
void play_turn(GameSession& s, const CompoundMove& m);

/// Rebuilds a session from its start and history.
GameSession replay(const GameSession& s);

/// Machine-readable reason a move is illegal, or empty when it is legal.
std::string move_violation(const Position& p, const CompoundMove& m, MoveRule rule);

/// In-memory sessions with idle-time eviction. Each session carries its own
/// lock; the store lock only guards the map.
class SessionStore {
 public:
  using Clock = std::chrono::steady_clock;

  struct Entry {
    std::mutex mutex;
    GameSession session;
    Clock::time_point touched;
  };

  explicit SessionStore(Clock::duration ttl = std::chrono::hours(1)) : ttl_(ttl) {}

  std::shared_ptr<Entry> create(Variant v, Position initial, Side first);
  /// nullptr when unknown or expired.
  std::shared_ptr<Entry> find(const std::string& id);
  std::size_t size();
  /// Drops sessions idle for longer than the ttl as of now.
  void evict(Clock::time_point now = Clock::now());

 private:
  std::string fresh_id();
  void evict_locked(Clock::time_point now);

  Clock::duration ttl_;
  std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t counter_ = 0;
};

}  // namespace kayles
