#include "kayles/suspense.hpp"

#include <algorithm>
#include <climits>

#include "kayles/error.hpp"

namespace kayles {

namespace {

constexpr PathLen kTableCap = 4096;

// Even suspense is the goal under normal play, odd under misere.
bool is_good(int s, Play play) { return (s % 2 == 0) == (play == Play::Normal); }

// First landmark of the doubling ladder strictly below n: 5(2^r - 1) for
// normal play, 7 * 2^r - 5 for misere.
PathLen landmark_below(PathLen n, Play play) {
  PathLen best = 0;
  for (long long k = 1;; k *= 2) {
    long long t = play == Play::Normal ? 5 * (k - 1) : 7 * k - 5;
    if (t >= n) break;
    best = static_cast<PathLen>(t);
  }
  return best;
}

}  // namespace

std::vector<int> suspense_table(PathLen n, Play play) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  std::vector<int> s{0};
  s.reserve(static_cast<std::size_t>(n) + 1);
  for (PathLen m = 1; m <= n; ++m) {
    int best_good = -1;
    int best_bad = INT_MAX;
    for (int v = 1; v <= (m + 1) / 2; ++v) {
      auto [a, b] = vertex_result(m, v);
      const int opt = std::max(a > 0 ? s[a] : 0, b > 0 ? s[b] : 0);
      if (is_good(opt, play)) {
        best_good = std::max(best_good, opt);
      } else {
        best_bad = std::min(best_bad, opt);
      }
    }
    s.push_back(best_good >= 0 ? best_good + 1 : best_bad + 1);
  }
  return s;
}

int suspense_closed_form(PathLen n, Play play) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  if (n == 0) return 0;
  int r = 0;
  if (play == Play::Normal) {
    // 5(2^r - 1) <= n <= 5(2^{r+1} - 1) - 1
    while (5LL * ((2LL << r) - 1) - 1 < n) ++r;
    const long long lo = 5LL * ((1LL << r) - 1);
    const long long hi = 5LL * ((2LL << r) - 1) - 1;
    if (n == lo) return 2 * r;
    if (n == hi) return 2 * r + 2;
    return 2 * r + 1;
  }
  // 7 * 2^r - 6 <= n <= 7 * 2^{r+1} - 7
  while (7LL * (2LL << r) - 7 < n) ++r;
  const long long lo = 7LL * (1LL << r) - 6;
  return (n == lo || n == lo + 1) ? 2 * r + 1 : 2 * r + 2;
}

int suspense(PathLen n, Play play) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  if (n > kTableCap) return suspense_closed_form(n, play);
  static const std::vector<int> normal = suspense_table(kTableCap, Play::Normal);
  static const std::vector<int> misere = suspense_table(kTableCap, Play::Misere);
  return (play == Play::Normal ? normal : misere)[static_cast<std::size_t>(n)];
}

int ccc_suspense(const Position& p, Play play) {
  int s = 0;
  for (auto n : p.parts()) s = std::max(s, suspense(n, play));
  return s;
}

Outcome ccc_outcome(const Position& p, Play play) {
  return is_good(ccc_suspense(p, play), play) ? Outcome::P : Outcome::N;
}

CompoundMove ccc_best_move(const Position& p, Play play) {
  if (p.empty() || ccc_outcome(p, play) == Outcome::P) {
    throw Error(ErrorKind::NotWinnable, format_position(p) + " is a P-position");
  }
  // Every component longer than the landmark t is cut down to P_{t-1}, P_t or
  // P_t u P_{n-t-3}; shorter components take their first vertex.
  const PathLen t = landmark_below(p.largest(), play);
  CompoundMove m;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const PathLen n = p[i];
    int v = 1;
    if (n == t + 3) {
      v = 2;
    } else if (n > t + 3) {
      v = t + 2;
    }
    m.choices.push_back({i, v});
  }
  return m;
}

}  // namespace kayles
