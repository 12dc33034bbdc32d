#include "kayles/session.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "kayles/error.hpp"

namespace kayles {

const char* to_string(Side s) { return s == Side::Human ? "human" : "engine"; }

GameSession start_session(std::string id, Variant v, Position initial, Side first) {
  GameSession s;
  s.id = std::move(id);
  s.variant = v;
  s.initial = initial;
  s.first = first;
  s.position = std::move(initial);
  s.to_move = first;
  if (s.position.empty()) {
    // Nobody can move: the side to move loses under normal play, wins under misere.
    s.finished = true;
    s.winner = v.play == Play::Normal ? other(first) : first;
  }
  return s;
}

std::string move_violation(const Position& p, const CompoundMove& m, MoveRule rule) {
  if (p.empty()) return "game-over";
  if (m.choices.empty()) return "empty-move";
  auto choices = m.choices;
  std::sort(choices.begin(), choices.end());
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (i && choices[i].component == choices[i - 1].component) return "duplicate-component";
    if (choices[i].component >= p.size()) return "unknown-component";
  }
  if (rule == MoveRule::Disjunctive && choices.size() != 1) return "arity";
  if (rule == MoveRule::Conjunctive && choices.size() != p.size()) return "arity";
  for (const auto& c : choices) {
    if (c.vertex < 1 || c.vertex > p[c.component]) return "vertex-out-of-range";
  }
  return {};
}

void play_turn(GameSession& s, const CompoundMove& m) {
  if (s.finished) throw Error(ErrorKind::IllegalMove, "the game is over");
  const Transition t = apply_move(s.position, m, s.variant.move_rule);
  const Side mover = s.to_move;
  s.history.push_back({mover, m});
  s.position = t.successor;
  if (ends_game(t, s.variant.ending)) {
    s.finished = true;
    s.winner = ender_wins(s.variant.play) ? mover : other(mover);
  } else {
    s.to_move = other(mover);
  }
}

GameSession replay(const GameSession& s) {
  GameSession r = start_session(s.id, s.variant, s.initial, s.first);
  for (const auto& turn : s.history) play_turn(r, turn.move);
  return r;
}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%04llx", static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(++counter_ & 0xffff));
  return buf;
}

std::shared_ptr<SessionStore::Entry> SessionStore::create(Variant v, Position initial,
                                                          Side first) {
  auto entry = std::make_shared<Entry>();
  const auto now = Clock::now();
  std::lock_guard lock(mutex_);
  evict_locked(now);
  entry->session = start_session(fresh_id(), v, std::move(initial), first);
  entry->touched = now;
  sessions_.emplace(entry->session.id, entry);
  return entry;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) {
  const auto now = Clock::now();
  std::lock_guard lock(mutex_);
  evict_locked(now);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->touched = now;
  return it->second;
}

std::size_t SessionStore::size() {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void SessionStore::evict(Clock::time_point now) {
  std::lock_guard lock(mutex_);
  evict_locked(now);
}

void SessionStore::evict_locked(Clock::time_point now) {
  std::erase_if(sessions_, [&](const auto& kv) { return now - kv.second->touched > ttl_; });
}

}  // namespace kayles
