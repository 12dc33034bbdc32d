#include "kayles/conjunctive.hpp"

#include <algorithm>
#include <climits>

#include "kayles/error.hpp"

namespace kayles {

namespace {

constexpr PathLen kTableCap = 2048;

bool is_good(int r, Play play) { return (r % 2 == 0) == (play == Play::Normal); }

}  // namespace

std::vector<int> remoteness_table(PathLen n, Play play) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  std::vector<int> r{0};
  r.reserve(static_cast<std::size_t>(n) + 1);
  for (PathLen m = 1; m <= n; ++m) {
    int best_good = INT_MAX;
    int best_bad = -1;
    for (int v = 1; v <= (m + 1) / 2; ++v) {
      auto [a, b] = vertex_result(m, v);
      int opt = 0;  // both residuals empty: the game has ended
      if (a > 0 && b > 0) {
        opt = std::min(r[a], r[b]);
      } else if (a > 0 || b > 0) {
        opt = r[std::max(a, b)];
      }
      if (is_good(opt, play)) {
        best_good = std::min(best_good, opt);
      } else {
        best_bad = std::max(best_bad, opt);
      }
    }
    r.push_back(best_good != INT_MAX ? best_good + 1 : best_bad + 1);
  }
  return r;
}

int remoteness_closed_form(PathLen n, Play play) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  if (n == 0) return 0;
  if (play == Play::Misere) return n <= 2 ? 1 : 2;
  static constexpr int small[] = {0, 1, 1, 1, 2, 2, 3, 3, 3, 4, 4};
  return n <= 10 ? small[n] : 3;
}

int remoteness(PathLen n, Play play) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  if (n > kTableCap) return remoteness_closed_form(n, play);
  static const std::vector<int> normal = remoteness_table(kTableCap, Play::Normal);
  static const std::vector<int> misere = remoteness_table(kTableCap, Play::Misere);
  return (play == Play::Normal ? normal : misere)[static_cast<std::size_t>(n)];
}

int conj_remoteness(const Position& p, Play play) {
  if (p.empty()) return 0;
  int r = INT_MAX;
  for (auto n : p.parts()) r = std::min(r, remoteness(n, play));
  return r;
}

Outcome conj_outcome(const Position& p, Play play) {
  return is_good(conj_remoteness(p, play), play) ? Outcome::P : Outcome::N;
}

CompoundMove conj_best_move(const Position& p, Play play) {
  if (p.empty() || conj_outcome(p, play) == Outcome::P) {
    throw Error(ErrorKind::NotWinnable, format_position(p) + " is a P-position");
  }
  CompoundMove m;
  const PathLen shortest = p.smallest();
  // Components are sorted descending, so the shortest one is last.
  const std::size_t last = p.size() - 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const PathLen n = p[i];
    int v = 1;
    if (play == Play::Misere) {
      // Leave a path of order 1 in every component.
      v = n == 3 ? 1 : 3;
    } else if (shortest <= 3) {
      if (i == last) v = emptying_vertex(n);
    } else if (shortest <= 8) {
      // Shortest goes to P_4 or P_5, the others lose two vertices.
      if (i == last) v = n == 8 ? 2 : 1;
    } else {
      // Every component becomes P_4 u P_{n-7}.
      v = 6;
    }
    m.choices.push_back({i, v});
  }
  return m;
}

}  // namespace kayles
