#include "kayles/audit.hpp"

#include <chrono>
#include <cstdio>

#include "kayles/error.hpp"
#include "kayles/solver.hpp"

namespace kayles {

namespace {

void partitions(int remaining, int cap, std::vector<PathLen>& parts,
                const std::function<void(const Position&)>& visit) {
  if (remaining == 0) {
    visit(Position::from_lengths(parts));
    return;
  }
  for (int first = std::min(remaining, cap); first >= 1; --first) {
    parts.push_back(first);
    partitions(remaining - first, first, parts, visit);
    parts.pop_back();
  }
}

bool is_disj_misere(Variant v) {
  return v.move_rule == MoveRule::Disjunctive && v.ending == Ending::Long &&
         v.play == Play::Misere;
}

}  // namespace

void for_each_position(int max_total, const std::function<void(const Position&)>& visit) {
  std::vector<PathLen> parts;
  for (int total = 0; total <= max_total; ++total) partitions(total, total, parts, visit);
}

std::vector<Position> enumerate_positions(int max_total) {
  std::vector<Position> out;
  for_each_position(max_total, [&](const Position& p) { out.push_back(p); });
  return out;
}

DiscrepancyReport audit_variant(Variant v, int max_total, Oracle& oracle) {
  if (is_disj_misere(v)) {
    throw Error(ErrorKind::Unsupported, "disj-misere has no solver to audit");
  }
  const auto start = std::chrono::steady_clock::now();
  DiscrepancyReport report{v, max_total, 0, {}, 0.0};

  for_each_position(max_total, [&](const Position& p) {
    ++report.positions_checked;
    const Outcome truth = oracle.outcome(p, v, max_total);
    const Outcome solved = analyze(v, p, oracle).outcome;
    if (solved != truth) {
      report.entries.push_back(
          {p, "outcome", std::string(1, to_char(solved)), std::string(1, to_char(truth))});
      return;
    }
    if (truth == Outcome::P || p.empty()) return;

    std::string claimed;
    std::string verdict;
    try {
      const CompoundMove m = best_move(v, p, oracle);
      claimed = format_move(m);
      const Transition t = apply_move(p, m, v.move_rule);
      bool wins = false;
      if (v.ending == Ending::Short && t.emptied_components > 0) {
        wins = ender_wins(v.play);
      } else {
        wins = oracle.outcome(t.successor, v, max_total) == Outcome::P;
      }
      if (wins) return;
      verdict = "loses to " + format_position(t.successor);
    } catch (const Error& e) {
      claimed = claimed.empty() ? std::string(to_string(e.kind())) : claimed;
      verdict = e.what();
    }
    report.entries.push_back({p, "best-move", claimed, verdict});
  });

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_report(std::ostream& out, const DiscrepancyReport& report) {
  out << "position,kind,solver,oracle\n";
  for (const auto& d : report.entries) {
    out << '"' << format_position(d.position) << "\"," << d.kind << ",\"" << d.solver << "\",\""
        << d.oracle << "\"\n";
  }
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.3f", report.wall_seconds);
  out << "# variant," << report.variant.name() << '\n'
      << "# max_total," << report.max_total << '\n'
      << "# positions_checked," << report.positions_checked << '\n'
      << "# discrepancies," << report.entries.size() << '\n'
      << "# wall_seconds," << wall << '\n';
}

std::vector<PathLen> losing_paths(Variant v, PathLen limit) {
  if (is_disj_misere(v)) {
    throw Error(ErrorKind::Unsupported, "disj-misere has no solver for losing sets");
  }
  std::vector<PathLen> out;
  for (PathLen n = 0; n <= limit; ++n) {
    if (analyze(v, Position::single(n)).outcome == Outcome::P) out.push_back(n);
  }
  return out;
}

}  // namespace kayles
