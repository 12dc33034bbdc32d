#include "kayles/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>

#include "kayles/error.hpp"

namespace kayles {

OracleConfig default_oracle_config() {
  OracleConfig config;
  if (const char* env = std::getenv("KAYLES_ORACLE_BOUND")) {
    try {
      int bound = std::stoi(env);
      if (bound > 0) config.max_total = bound;
    } catch (const std::exception&) {
      // Malformed override: keep the default.
    }
  }
  return config;
}

namespace {

struct Residual {
  PathLen a = 0;
  PathLen b = 0;
  bool emptied() const { return a == 0 && b == 0; }
};

std::vector<Residual> distinct_residuals(PathLen n) {
  std::vector<Residual> out;
  for (int v = 1; v <= (n + 1) / 2; ++v) {
    auto [a, b] = vertex_result(n, v);
    out.push_back({std::max(a, b), std::min(a, b)});
  }
  return out;
}

// What one group of equal-length parts contributes to a successor.
struct GroupChoice {
  std::vector<PathLen> parts;
  int emptied = 0;
  int touched = 0;
};

// All multisets of `count` picks from the residuals (plus "untouched" when
// allowed), each turned into a GroupChoice.
std::vector<GroupChoice> group_choices(PathLen len, int count, bool allow_untouched) {
  const auto residuals = distinct_residuals(len);
  const int items = static_cast<int>(residuals.size()) + (allow_untouched ? 1 : 0);
  std::vector<GroupChoice> out;
  std::vector<int> pick(static_cast<std::size_t>(count), 0);
  while (true) {
    GroupChoice c;
    for (int idx : pick) {
      if (idx == static_cast<int>(residuals.size())) {
        c.parts.push_back(len);
        continue;
      }
      const auto& r = residuals[static_cast<std::size_t>(idx)];
      ++c.touched;
      if (r.emptied()) ++c.emptied;
      if (r.a) c.parts.push_back(r.a);
      if (r.b) c.parts.push_back(r.b);
    }
    out.push_back(std::move(c));
    // Next non-decreasing index tuple.
    int k = count - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == items - 1) --k;
    if (k < 0) break;
    const int next = pick[static_cast<std::size_t>(k)] + 1;
    for (int j = k; j < count; ++j) pick[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

}  // namespace

void for_each_successor(const Position& p, MoveRule rule,
                        const std::function<bool(const Position&, int)>& visit) {
  if (p.empty()) return;
  std::vector<std::pair<PathLen, int>> groups;
  for (auto n : p.parts()) {
    if (!groups.empty() && groups.back().first == n) {
      ++groups.back().second;
    } else {
      groups.emplace_back(n, 1);
    }
  }

  if (rule == MoveRule::Disjunctive) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (const auto& r : distinct_residuals(groups[g].first)) {
        std::vector<PathLen> parts;
        for (std::size_t h = 0; h < groups.size(); ++h) {
          const int keep = groups[h].second - (h == g ? 1 : 0);
          parts.insert(parts.end(), static_cast<std::size_t>(keep), groups[h].first);
        }
        parts.push_back(r.a);
        parts.push_back(r.b);
        if (!visit(Position::from_lengths(parts), r.emptied() ? 1 : 0)) return;
      }
    }
    return;
  }

  const bool selective = rule == MoveRule::Selective;
  std::vector<std::vector<GroupChoice>> per_group;
  per_group.reserve(groups.size());
  for (auto [len, count] : groups) per_group.push_back(group_choices(len, count, selective));

  std::vector<std::size_t> idx(groups.size(), 0);
  while (true) {
    int touched = 0;
    int emptied = 0;
    std::vector<PathLen> parts;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& c = per_group[g][idx[g]];
      touched += c.touched;
      emptied += c.emptied;
      parts.insert(parts.end(), c.parts.begin(), c.parts.end());
    }
    if (touched > 0 && !visit(Position::from_lengths(parts), emptied)) return;
    std::size_t g = groups.size();
    while (g > 0) {
      if (++idx[g - 1] < per_group[g - 1].size()) break;
      idx[g - 1] = 0;
      --g;
    }
    if (g == 0) return;
  }
}

Oracle::Oracle(OracleConfig config) : config_(config) {}

void Oracle::check_bound(const Position& p, int bound) const {
  if (p.total() > bound) {
    throw Error(ErrorKind::BoundExceeded, "position " + format_position(p) + " has " +
                                              std::to_string(p.total()) +
                                              " vertices, oracle bound is " +
                                              std::to_string(bound));
  }
  if (static_cast<int>(p.size()) > config_.max_components) {
    throw Error(ErrorKind::BoundExceeded,
                "position " + format_position(p) + " has more than " +
                    std::to_string(config_.max_components) + " components");
  }
}

namespace {

template <typename Map>
std::optional<typename Map::mapped_type> lookup(std::shared_mutex& mutex, const Map& map,
                                                const Position& p) {
  std::shared_lock lock(mutex);
  auto it = map.find(p);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

template <typename Map>
void store(std::shared_mutex& mutex, Map& map, const Position& p,
           typename Map::mapped_type value) {
  std::unique_lock lock(mutex);
  map.try_emplace(p, value);
}

}  // namespace

Outcome Oracle::outcome(const Position& p, Variant v) {
  return outcome(p, v, config_.max_total);
}

Outcome Oracle::outcome(const Position& p, Variant v, int bound) {
  check_bound(p, bound);
  return outcome_rec(p, v);
}

Outcome Oracle::outcome_rec(const Position& p, Variant v) {
  if (p.empty()) return v.play == Play::Normal ? Outcome::P : Outcome::N;
  auto& memo = outcomes_[static_cast<std::size_t>(v.index())];
  if (auto hit = lookup(mutex_, memo, p)) return *hit;

  Outcome result = Outcome::P;
  for_each_successor(p, v.move_rule, [&](const Position& next, int emptied) {
    if (v.ending == Ending::Short && emptied > 0) {
      if (ender_wins(v.play)) {
        result = Outcome::N;
        return false;
      }
      return true;
    }
    if (outcome_rec(next, v) == Outcome::P) {
      result = Outcome::N;
      return false;
    }
    return true;
  });
  store(mutex_, memo, p, result);
  return result;
}

int Oracle::remoteness(const Position& p, Play play) {
  check_bound(p, config_.max_total);
  return remoteness_rec(p, play);
}

int Oracle::remoteness_rec(const Position& p, Play play) {
  if (p.empty()) return 0;
  auto& memo = remoteness_[static_cast<std::size_t>(play)];
  if (auto hit = lookup(mutex_, memo, p)) return *hit;

  // Winner hurries: minimal remoteness of the good parity, else maximal of the other.
  const int good = play == Play::Normal ? 0 : 1;
  int best_good = INT_MAX;
  int best_bad = -1;
  for_each_successor(p, MoveRule::Conjunctive, [&](const Position& next, int emptied) {
    const int r = emptied > 0 ? 0 : remoteness_rec(next, play);
    if (r % 2 == good) {
      best_good = std::min(best_good, r);
    } else {
      best_bad = std::max(best_bad, r);
    }
    return true;
  });
  const int result = best_good != INT_MAX ? best_good + 1 : best_bad + 1;
  store(mutex_, memo, p, result);
  return result;
}

int Oracle::suspense(const Position& p, Play play) {
  check_bound(p, config_.max_total);
  return suspense_rec(p, play);
}

int Oracle::suspense_rec(const Position& p, Play play) {
  if (p.empty()) return 0;
  auto& memo = suspense_[static_cast<std::size_t>(play)];
  if (auto hit = lookup(mutex_, memo, p)) return *hit;

  // Winner delays: maximal suspense of the good parity, else minimal of the other.
  const int good = play == Play::Normal ? 0 : 1;
  int best_good = -1;
  int best_bad = INT_MAX;
  for_each_successor(p, MoveRule::Conjunctive, [&](const Position& next, int) {
    const int s = suspense_rec(next, play);
    if (s % 2 == good) {
      best_good = std::max(best_good, s);
    } else {
      best_bad = std::min(best_bad, s);
    }
    return true;
  });
  const int result = best_good >= 0 ? best_good + 1 : best_bad + 1;
  store(mutex_, memo, p, result);
  return result;
}

bool Oracle::is_winning_move(const Position& p, const CompoundMove& m, Variant v) {
  check_bound(p, config_.max_total);
  const Transition t = apply_move(p, m, v.move_rule);
  if (v.ending == Ending::Short && t.emptied_components > 0) return ender_wins(v.play);
  return outcome_rec(t.successor, v) == Outcome::P;
}

std::vector<CompoundMove> Oracle::best_moves(const Position& p, Variant v) {
  check_bound(p, config_.max_total);
  if (v.move_rule == MoveRule::Selective &&
      static_cast<int>(p.size()) > config_.max_selective_components) {
    throw Error(ErrorKind::BoundExceeded,
                "selective move listing is limited to " +
                    std::to_string(config_.max_selective_components) + " components");
  }
  if (outcome_rec(p, v) == Outcome::P) {
    throw Error(ErrorKind::NotWinnable, format_position(p) + " is a P-position");
  }
  std::vector<CompoundMove> out;
  for (auto& [move, t] : compound_moves(p, v.move_rule)) {
    const bool wins = (v.ending == Ending::Short && t.emptied_components > 0)
                          ? ender_wins(v.play)
                          : outcome_rec(t.successor, v) == Outcome::P;
    if (wins) out.push_back(std::move(move));
  }
  return out;
}

void Oracle::clear() {
  std::unique_lock lock(mutex_);
  for (auto& m : outcomes_) m.clear();
  for (auto& m : remoteness_) m.clear();
  for (auto& m : suspense_) m.clear();
}

std::size_t Oracle::memo_size() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& m : outcomes_) n += m.size();
  for (const auto& m : remoteness_) n += m.size();
  for (const auto& m : suspense_) n += m.size();
  return n;
}

Oracle& shared_oracle() {
  static Oracle oracle;
  return oracle;
}

}  // namespace kayles
