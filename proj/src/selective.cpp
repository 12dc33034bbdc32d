#include "kayles/selective.hpp"

#include <algorithm>

#include "kayles/audit.hpp"
#include "kayles/error.hpp"
#include "kayles/oracle.hpp"

namespace kayles {

namespace {

constexpr PathLen kTableCap = 2048;

bool misere(SigmaRule rule) {
  return rule == SigmaRule::SelMisere || rule == SigmaRule::ShortSelMisere;
}

const std::vector<int>& cached_table(SigmaRule rule) {
  static const std::vector<int> tables[4] = {
      sigma_table(kTableCap, SigmaRule::SelNormal),
      sigma_table(kTableCap, SigmaRule::SelMisere),
      sigma_table(kTableCap, SigmaRule::ShortSelNormal),
      sigma_table(kTableCap, SigmaRule::ShortSelMisere),
  };
  return tables[static_cast<int>(rule)];
}

bool all_parts(const Position& p, auto pred) {
  return std::all_of(p.parts().begin(), p.parts().end(), pred);
}

// First vertex of P_n whose residual satisfies accept(a, b).
int first_vertex(PathLen n, auto accept) {
  for (int v = 1; v <= n; ++v) {
    auto [a, b] = vertex_result(n, v);
    if (accept(a, b)) return v;
  }
  return 0;
}

}  // namespace

SigmaRule sigma_rule(Play play, Ending ending) {
  if (ending == Ending::Long) {
    return play == Play::Normal ? SigmaRule::SelNormal : SigmaRule::SelMisere;
  }
  return play == Play::Normal ? SigmaRule::ShortSelNormal : SigmaRule::ShortSelMisere;
}

std::vector<int> sigma_table(PathLen n, SigmaRule rule) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  const int ended = misere(rule) ? 1 : 0;
  std::vector<int> s{ended};
  s.reserve(static_cast<std::size_t>(n) + 1);
  // Short misere: from order 15 on, a two-path option is N iff some part is 1, 2 or 3 mod 5.
  const bool residue = rule == SigmaRule::ShortSelMisere;
  for (PathLen m = 1; m <= n; ++m) {
    int lowest = 1;
    for (int v = 1; v <= (m + 1) / 2 && lowest > 0; ++v) {
      auto [a, b] = vertex_result(m, v);
      int opt = ended;
      if (residue && m >= 15 && a > 0 && b > 0) {
        opt = (a % 5 >= 1 && a % 5 <= 3) || (b % 5 >= 1 && b % 5 <= 3) ? 1 : 0;
      } else if (a > 0 || b > 0) {
        opt = (a > 0 && s[a]) || (b > 0 && s[b]) ? 1 : 0;
      }
      lowest = std::min(lowest, opt);
    }
    s.push_back(1 - lowest);
  }
  return s;
}

int sigma_closed_form(PathLen n, SigmaRule rule) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  switch (rule) {
    case SigmaRule::SelNormal:
    case SigmaRule::ShortSelNormal:
      return (n % 5 == 0 || n % 5 == 4) ? 0 : 1;
    case SigmaRule::SelMisere:
      return (n % 7 == 1 || n % 7 == 2) ? 0 : 1;
    case SigmaRule::ShortSelMisere:
      if (n == 1 || n == 2 || n == 8 || n == 9) return 0;
      return (n >= 15 && (n % 5 == 0 || n % 5 == 4)) ? 0 : 1;
  }
  return 1;
}

int sigma_path(PathLen n, SigmaRule rule) {
  if (n < 0) throw Error(ErrorKind::InvalidLength, "negative path length");
  if (n > kTableCap) return sigma_closed_form(n, rule);
  return cached_table(rule)[static_cast<std::size_t>(n)];
}

LambdaProfile lambda_profile(const Position& p) {
  LambdaProfile out;
  for (auto n : p.parts()) ++out.counts[static_cast<std::size_t>(n % 5)];
  return out;
}

Outcome sel_outcome(const Position& p, Play play, Ending ending) {
  const SigmaRule rule = sigma_rule(play, ending);
  if (play == Play::Normal) {
    return all_parts(p, [&](PathLen n) { return sigma_path(n, rule) == 0; }) ? Outcome::P
                                                                             : Outcome::N;
  }
  if (p.empty()) return Outcome::N;
  if (ending == Ending::Long) {
    return all_parts(p, [&](PathLen n) { return sigma_path(n, rule) == 0; }) ? Outcome::P
                                                                             : Outcome::N;
  }
  if (p.size() == 1) return sigma_path(p[0], rule) == 0 ? Outcome::P : Outcome::N;
  return lambda_profile(p).low_residues() == 0 ? Outcome::P : Outcome::N;
}

Outcome sel_rule2_outcome(const Position& p, Play play, Ending ending) {
  if (play == Play::Normal) return sel_outcome(p, play, ending);
  if (p.empty()) return Outcome::N;
  auto all_zero = [&](SigmaRule rule) {
    return all_parts(p, [&](PathLen n) { return sigma_path(n, rule) == 0; }) ? Outcome::P
                                                                             : Outcome::N;
  };
  if (ending == Ending::Short) return all_zero(SigmaRule::ShortSelMisere);
  if (p.size() == 1) return all_zero(SigmaRule::SelMisere);
  return all_zero(SigmaRule::SelNormal);
}

CompoundMove sel_best_move(const Position& p, Play play, Ending ending) {
  if (sel_outcome(p, play, ending) == Outcome::P || p.empty()) {
    throw Error(ErrorKind::NotWinnable, format_position(p) + " is a P-position");
  }
  const SigmaRule rule = sigma_rule(play, ending);
  const int ended = misere(rule) ? 1 : 0;
  const bool residue = play == Play::Misere && ending == Ending::Short && p.size() >= 2;

  // is_winning(n): the component must be played in.
  // accept(a, b): the residual of one played component is losing.
  auto is_winning = [&](PathLen n) {
    if (residue) return n % 5 >= 1 && n % 5 <= 3;
    return sigma_path(n, rule) == 1;
  };
  auto accept = [&](PathLen a, PathLen b) {
    if (a == 0 && b == 0) return residue || ended == 0;
    for (PathLen x : {a, b}) {
      if (x == 0) continue;
      if (residue ? !(x % 5 == 0 || x % 5 == 4) : sigma_path(x, rule) != 0) return false;
    }
    return true;
  };

  CompoundMove m;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_winning(p[i])) continue;
    int v = first_vertex(p[i], accept);
    if (v == 0) {
      throw Error(ErrorKind::NotWinnable,
                  "no losing residue reachable from P_" + std::to_string(p[i]));
    }
    m.choices.push_back({i, v});
  }
  return m;
}

std::vector<SelectiveDiscrepancy> misere_selective_discrepancies(int bound, Oracle& oracle) {
  std::vector<SelectiveDiscrepancy> rows;
  for (Ending ending : {Ending::Long, Ending::Short}) {
    const Variant v{MoveRule::Selective, ending, Play::Misere};
    for_each_position(bound, [&](const Position& p) {
      SelectiveDiscrepancy d{p, v, sel_outcome(p, Play::Misere, ending),
                             sel_rule2_outcome(p, Play::Misere, ending),
                             oracle.outcome(p, v, bound)};
      if (d.calculus != d.rule2 || d.calculus != d.oracle) rows.push_back(std::move(d));
    });
  }
  return rows;
}

void write_discrepancy_csv(std::ostream& out, const std::vector<SelectiveDiscrepancy>& rows) {
  out << "position,calculus,rule2,oracle,variant\n";
  for (const auto& r : rows) {
    out << '"' << format_position(r.position) << "\"," << to_char(r.calculus) << ','
        << to_char(r.rule2) << ',' << to_char(r.oracle) << ',' << r.variant.name() << '\n';
  }
}

}  // namespace kayles
