#include "kayles/disjunctive.hpp"

#include "kayles/error.hpp"
#include "kayles/oracle.hpp"

namespace kayles {

namespace {
// Dawson's chess: period 34 from index 52 (the last irregular value is at 51).
constexpr std::size_t kRhoPeriod = 34;
constexpr std::size_t kRhoPreperiod = 52;
constexpr std::size_t kRhoComputed = 300;
}  // namespace

const PeriodicSequence& rho_table() {
  static const PeriodicSequence table = [] {
    auto seq = octal_grundy(OctalCode::parse("0.137"), kRhoComputed);
    seq.kind = "rho";
    PeriodicSequence t(std::move(seq));
    if (!t.certify(kRhoPeriod, kRhoPreperiod)) {
      throw Error(ErrorKind::InsufficientData, "0.137 failed its periodicity certificate");
    }
    return t;
  }();
  return table;
}

std::uint32_t rho(PathLen n) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  return rho_table().at(static_cast<std::size_t>(n)).value();
}

std::uint32_t rho_nim_sum(const Position& p) {
  std::uint32_t x = 0;
  for (auto n : p.parts()) x ^= rho(n);
  return x;
}

Outcome disj_normal_outcome(const Position& p) {
  return rho_nim_sum(p) == 0 ? Outcome::P : Outcome::N;
}

CompoundMove disj_normal_best_move(const Position& p) {
  const std::uint32_t total = rho_nim_sum(p);
  if (total == 0) throw Error(ErrorKind::NotWinnable, format_position(p) + " is a P-position");
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::uint32_t target = total ^ rho(p[i]);
    for (int v = 1; v <= p[i]; ++v) {
      auto [a, b] = vertex_result(p[i], v);
      if ((rho(a) ^ rho(b)) == target) return CompoundMove{{{i, v}}};
    }
  }
  throw Error(ErrorKind::NotWinnable, "no zeroing move found for " + format_position(p));
}

Outcome disj_misere_outcome(const Position& p, int bound) {
  return shared_oracle().outcome(p, Variant{MoveRule::Disjunctive, Ending::Long, Play::Misere},
                                 bound);
}

}  // namespace kayles
