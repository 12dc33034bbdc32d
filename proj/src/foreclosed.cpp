#include "kayles/foreclosed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

#include "kayles/error.hpp"

namespace kayles {

namespace {

constexpr std::size_t kFplusPeriod = 84;
constexpr std::size_t kFplusPreperiod = 245;
constexpr std::size_t kFplusComputed = 700;

// Shared recursion for both foreclosed sequences: options of P_n are P_{n-2},
// P_{n-3} and the splits P_i u P_j with i + j = n - 3. Star entries are skipped
// by mex; in absorbing mode a split with a Star side is Star.
void extend_foreclosed(std::vector<GameValue>& f, std::size_t limit, StarMode mode) {
  std::vector<char> seen;
  for (std::size_t n = f.size(); n <= limit; ++n) {
    seen.assign(seen.size(), 0);
    auto mark = [&](GameValue v) {
      if (v.is_star()) return;
      if (v.value() >= seen.size()) seen.resize(v.value() + 1, 0);
      seen[v.value()] = 1;
    };
    mark(f[n - 2]);
    mark(f[n - 3]);
    for (std::size_t i = 1; 2 * i <= n - 3; ++i) mark(nim_sum(f[i], f[n - 3 - i], mode));
    std::uint32_t m = 0;
    while (m < seen.size() && seen[m]) ++m;
    f.push_back(GameValue::nat(m));
  }
}

class FminusCache {
 public:
  ValueSequence get(std::size_t limit) {
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_ = {kStar, GameValue::nat(0), GameValue::nat(0)};
    if (values_.size() <= limit) extend_foreclosed(values_, limit, StarMode::Neutral);
    return ValueSequence{"fminus", {values_.begin(), values_.begin() + limit + 1}};
  }

  GameValue value(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_ = {kStar, GameValue::nat(0), GameValue::nat(0)};
    if (values_.size() <= n) extend_foreclosed(values_, n, StarMode::Neutral);
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<GameValue> values_;
};

FminusCache& fminus_cache() {
  static FminusCache cache;
  return cache;
}

GameValue component_value(PathLen n, Play play) {
  return play == Play::Normal ? fplus(n) : fminus_cache().value(static_cast<std::size_t>(n));
}

StarMode star_mode(Play play) {
  return play == Play::Normal ? StarMode::Absorb : StarMode::Neutral;
}

// Foreclosed value of the residual paths a and b (zero-length residuals are not components).
GameValue residual_value(PathLen a, PathLen b, Play play) {
  GameValue v = GameValue::nat(0);
  for (PathLen x : {a, b}) {
    if (x > 0) v = nim_sum(v, component_value(x, play), star_mode(play));
  }
  return v;
}

}  // namespace

const PeriodicSequence& fplus_table() {
  static const PeriodicSequence table = [] {
    std::vector<GameValue> f(4, kStar);
    extend_foreclosed(f, kFplusComputed, StarMode::Absorb);
    PeriodicSequence t(ValueSequence{"fplus", std::move(f)});
    if (!t.certify(kFplusPeriod, kFplusPreperiod)) {
      throw Error(ErrorKind::InsufficientData, "F+ failed its periodicity certificate");
    }
    return t;
  }();
  return table;
}

GameValue fplus(PathLen n) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  return fplus_table().at(static_cast<std::size_t>(n));
}

ValueSequence fminus_sequence(std::size_t limit) { return fminus_cache().get(limit); }

GameValue fminus(PathLen n, std::size_t limit) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  if (static_cast<std::size_t>(n) > limit) {
    throw Error(ErrorKind::InsufficientData,
                "F- requested at " + std::to_string(n) + " beyond limit " + std::to_string(limit));
  }
  return fminus_cache().value(static_cast<std::size_t>(n));
}

GameValue ddc_value(const Position& p, Play play) {
  GameValue v = GameValue::nat(0);
  for (auto n : p.parts()) v = nim_sum(v, component_value(n, play), star_mode(play));
  return v;
}

Outcome ddc_outcome(const Position& p, Play play) {
  if (play == Play::Normal) {
    if (p.empty()) return Outcome::P;
    // Any path of order <= 3 can be emptied at once, which wins under the short rule.
    if (p.smallest() <= 3) return Outcome::N;
    return ddc_value(p, play) == GameValue::nat(0) ? Outcome::P : Outcome::N;
  }
  if (p.empty()) return Outcome::N;
  return ddc_value(p, play) == GameValue::nat(0) ? Outcome::P : Outcome::N;
}

CompoundMove ddc_best_move(const Position& p, Play play) {
  if (ddc_outcome(p, play) == Outcome::P || p.empty()) {
    throw Error(ErrorKind::NotWinnable, format_position(p) + " is a P-position");
  }
  if (play == Play::Normal) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 3) return CompoundMove{{{i, emptying_vertex(p[i])}}};
    }
  }
  const GameValue total = ddc_value(p, play);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const GameValue rest = nim_sum(total, component_value(p[i], play), star_mode(play));
    for (int v = 1; v <= p[i]; ++v) {
      auto [a, b] = vertex_result(p[i], v);
      if (a == 0 && b == 0) continue;  // ending a component never helps here
      GameValue option = residual_value(a, b, play);
      if (option.is_star()) continue;
      if (option == rest) return CompoundMove{{{i, v}}};
    }
  }
  throw Error(ErrorKind::NotWinnable, "no zeroing move found for " + format_position(p));
}

StatsRow fminus_stats(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InsufficientData, "statistics need n >= 1");
  auto seq = fminus_sequence(n);
  StatsRow row;
  row.n = n;
  double sum = 0.0;
  std::map<std::uint32_t, std::size_t> freq;
  for (std::size_t i = 1; i <= n; ++i) {
    auto v = seq[i].value();
    sum += v;
    ++freq[v];
    if (v == 0) {
      ++row.nb_zero;
      row.max_zero = i;
    }
    if (i == 1 || v > row.max) {
      row.max = v;
      row.pos_max = i;
    }
  }
  row.mean = sum / static_cast<double>(n);
  double abs_dev = 0.0;
  for (std::size_t i = 1; i <= n; ++i) abs_dev += std::abs(seq[i].value() - row.mean);
  row.deviation = abs_dev / static_cast<double>(n);
  std::size_t best = 0;
  for (auto [value, count] : freq) {
    if (count > best) {
      best = count;
      row.freq_value = value;
    }
  }
  row.pct_freq = 100.0 * static_cast<double>(best) / static_cast<double>(n);
  return row;
}

std::string format_stats_row(const StatsRow& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu,%zu,%u,%.6f,%.6f,%u,%.4f,%zu,%zu", r.n, r.nb_zero, r.max,
                r.mean, r.deviation, r.freq_value, r.pct_freq, r.max_zero, r.pos_max);
  return buf;
}

bool fminus_octal_check(std::size_t limit) {
  if (limit < 2) return true;
  auto f = fminus_sequence(limit);
  auto heaps = octal_grundy(OctalCode::parse("0.13337"), limit - 2);
  for (std::size_t n = 2; n <= limit; ++n) {
    if (!(f[n] == heaps[n - 2])) return false;
  }
  return true;
}

}  // namespace kayles
