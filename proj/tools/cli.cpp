#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kayles/api.hpp"
#include "kayles/audit.hpp"
#include "kayles/conjunctive.hpp"
#include "kayles/disjunctive.hpp"
#include "kayles/error.hpp"
#include "kayles/foreclosed.hpp"
#include "kayles/octal.hpp"
#include "kayles/selective.hpp"
#include "kayles/solver.hpp"
#include "kayles/suspense.hpp"

namespace kayles::cli {

namespace {

const std::vector<std::string> kKinds = {
    "rho",   "fplus", "fminus",           "rplus",            "rminus",
    "splus", "sminus", "sigma-sel-normal", "sigma-sel-misere", "sigma-ssc-normal",
    "sigma-ssc-misere", "octal"};

std::vector<GameValue> nats(const std::vector<int>& xs) {
  std::vector<GameValue> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(GameValue::nat(static_cast<std::uint32_t>(x)));
  return out;
}

ValueSequence build_sequence(const std::string& kind, std::size_t n, const std::string& code) {
  const auto len = static_cast<PathLen>(n);
  if (kind == "rho") {
    ValueSequence s{"rho", {}};
    for (std::size_t i = 0; i <= n; ++i) s.values.push_back(GameValue::nat(rho(static_cast<PathLen>(i))));
    return s;
  }
  if (kind == "fplus") {
    ValueSequence s{"fplus", {}};
    for (std::size_t i = 0; i <= n; ++i) s.values.push_back(fplus(static_cast<PathLen>(i)));
    return s;
  }
  if (kind == "fminus") return fminus_sequence(n);
  if (kind == "rplus") return {kind, nats(remoteness_table(len, Play::Normal))};
  if (kind == "rminus") return {kind, nats(remoteness_table(len, Play::Misere))};
  if (kind == "splus") return {kind, nats(suspense_table(len, Play::Normal))};
  if (kind == "sminus") return {kind, nats(suspense_table(len, Play::Misere))};
  if (kind == "sigma-sel-normal") return {kind, nats(sigma_table(len, SigmaRule::SelNormal))};
  if (kind == "sigma-sel-misere") return {kind, nats(sigma_table(len, SigmaRule::SelMisere))};
  if (kind == "sigma-ssc-normal") return {kind, nats(sigma_table(len, SigmaRule::ShortSelNormal))};
  if (kind == "sigma-ssc-misere") return {kind, nats(sigma_table(len, SigmaRule::ShortSelMisere))};
  if (kind == "octal") {
    if (code.empty()) throw Error(ErrorKind::Parse, "--kind octal needs --code");
    return octal_grundy(OctalCode::parse(code), n);
  }
  throw Error(ErrorKind::Parse, "unknown sequence kind '" + kind + "'");
}

void write_json(std::ostream& out, const ValueSequence& s) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : s.values) {
    if (v.is_star()) {
      values.push_back("*");
    } else {
      values.push_back(v.value());
    }
  }
  out << nlohmann::json{{"kind", s.kind}, {"values", values}}.dump() << '\n';
}

void render(std::ostream& out, const Position& p) {
  if (p.empty()) {
    out << "  (no vertices left)\n";
    return;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  " << i << ":";
    for (int v = 1; v <= p[i]; ++v) out << ' ' << (v % 10);
    out << "   P_" << p[i] << '\n';
  }
}

std::string describe(const Position& p, const CompoundMove& m) {
  std::ostringstream s;
  for (std::size_t i = 0; i < m.choices.size(); ++i) {
    if (i) s << ", ";
    s << "vertex " << m.choices[i].vertex << " of P_" << p[m.choices[i].component];
  }
  return s.str();
}

// Interactive game. Returns when the game ends or input runs out.
int play_loop(Variant v, Position p, bool engine_first, std::istream& in, std::ostream& out) {
  bool engine_to_move = engine_first;
  out << v.conway_name() << "\nmoves are \"component:vertex\" pairs, e.g. \"0:2 1:3\"\n";
  if (p.empty()) {
    const bool mover_wins = v.play == Play::Misere;
    out << ((mover_wins != engine_to_move) ? "you win\n" : "engine wins\n");
    return kOk;
  }
  while (true) {
    render(out, p);
    CompoundMove m;
    if (engine_to_move) {
      m = engine_move(v, p);
      out << "engine plays " << format_move(m) << " (" << describe(p, m) << ")\n";
    } else {
      out << "your move> " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\ninput closed\n";
        return kOk;
      }
      if (line == "quit" || line == "q") return kOk;
      try {
        m = parse_move(line);
        apply_move(p, m, v.move_rule);
      } catch (const Error& e) {
        out << "illegal move: " << e.what() << '\n';
        continue;
      }
    }
    const Transition t = apply_move(p, m, v.move_rule);
    p = t.successor;
    if (ends_game(t, v.ending)) {
      render(out, p);
      const bool mover_wins = ender_wins(v.play);
      out << ((mover_wins != engine_to_move) ? "you win\n" : "engine wins\n");
      return kOk;
    }
    engine_to_move = !engine_to_move;
  }
}

std::string join(const std::vector<PathLen>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Node-Kayles on paths under the twelve compound conventions", "kayles"};
  app.require_subcommand(1);

  std::string kind;
  std::size_t n = 0;
  std::string format = "csv";
  std::string code;
  auto* seq = app.add_subcommand("sequence", "print a value sequence for P_0..P_n");
  seq->add_option("--kind", kind, "rho, fplus, fminus, rplus, rminus, splus, sminus, sigma-..., octal")
      ->required();
  seq->add_option("--n", n, "last index")->required();
  seq->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  seq->add_option("--code", code, "octal code for --kind octal");

  std::string variant_name;
  std::string position_text;
  auto* outc = app.add_subcommand("outcome", "outcome class and deciding value");
  outc->add_option("--variant", variant_name)->required();
  outc->add_option("--position", position_text)->required();

  auto* best = app.add_subcommand("best-move", "a winning move, or the fallback move");
  best->add_option("--variant", variant_name)->required();
  best->add_option("--position", position_text)->required();

  std::string engine_side = "second";
  auto* play = app.add_subcommand("play", "play against the engine");
  play->add_option("--variant", variant_name)->required();
  play->add_option("--position", position_text)->required();
  play->add_option("--engine", engine_side)->check(CLI::IsMember({"first", "second"}));

  std::optional<std::size_t> period;
  std::optional<std::size_t> preperiod;
  std::size_t max_period = 0;
  auto* pc = app.add_subcommand("period-check", "certify or search for a period");
  pc->add_option("--kind", kind, "rho, fplus, fminus or octal")->required();
  pc->add_option("--n", n, "number of computed values minus one")->required();
  pc->add_option("--code", code);
  pc->add_option("--period", period);
  pc->add_option("--preperiod", preperiod);
  pc->add_option("--max-period", max_period, "search limit (default n/3)");

  PathLen limit = 0;
  auto* ls = app.add_subcommand("losing-set", "n <= limit with P_n a P-position");
  ls->add_option("--variant", variant_name)->required();
  ls->add_option("--n", limit)->required();

  std::vector<std::size_t> stat_sizes;
  auto* st = app.add_subcommand("stats", "statistics of the misere foreclosed sequence");
  st->add_option("--n", stat_sizes, "interval ends")->required();

  int bound = 10;
  std::string report_path;
  bool selective_report = false;
  auto* au = app.add_subcommand("audit", "compare solvers with the exhaustive oracle");
  au->add_option("--variant", variant_name, "variant name or 'all'")->required();
  au->add_option("--bound", bound, "largest total number of vertices");
  au->add_option("--report", report_path, "write the report to this file");
  au->add_flag("--selective-report", selective_report,
               "list misere selective disagreements instead");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* sv = app.add_subcommand("serve", "start the HTTP API");
  sv->add_option("--host", host);
  sv->add_option("--port", port);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? kOk : kUsage;
  }

  try {
    if (*seq) {
      if (std::find(kKinds.begin(), kKinds.end(), kind) == kKinds.end()) {
        err << "unknown sequence kind '" << kind << "'\n";
        return kUsage;
      }
      const ValueSequence s = build_sequence(kind, n, code);
      if (format == "json") {
        write_json(out, s);
      } else {
        write_csv(out, s);
      }
      return kOk;
    }
    if (*outc) {
      const Variant v = parse_variant(variant_name);
      const Analysis a = analyze(v, parse_position(position_text));
      out << to_char(a.outcome) << " (" << a.summary() << ")\n";
      return kOk;
    }
    if (*best) {
      const Variant v = parse_variant(variant_name);
      const Position p = parse_position(position_text);
      const CompoundMove m = engine_move(v, p);
      const Transition t = apply_move(p, m, v.move_rule);
      out << format_move(m) << " -> " << format_position(t.successor)
          << (analyze(v, p).outcome == Outcome::N ? "" : " (no winning move)") << '\n';
      return kOk;
    }
    if (*play) {
      const Variant v = parse_variant(variant_name);
      const Position p = parse_position(position_text);
      if (!has_solver(v) && p.total() > shared_oracle().config().max_total) {
        err << v.name() << " games are limited to " << shared_oracle().config().max_total
            << " vertices\n";
        return kBound;
      }
      return play_loop(v, p, engine_side == "first", in, out);
    }
    if (*pc) {
      if (kind != "rho" && kind != "fplus" && kind != "fminus" && kind != "octal") {
        err << "period-check supports rho, fplus, fminus and octal\n";
        return kUsage;
      }
      const ValueSequence s = kind == "fplus" ? fplus_table().sequence() : build_sequence(kind, n, code);
      ValueSequence window{s.kind, {s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(std::min(s.size(), n + 1))}};
      if (period || preperiod) {
        if (!period || !preperiod) {
          err << "--period and --preperiod go together\n";
          return kUsage;
        }
        const bool ok = guy_smith_check(window, *period, *preperiod);
        out << (ok ? "pass" : "fail") << ": period " << *period << " preperiod " << *preperiod
            << " on " << window.size() << " values\n";
        return ok ? kOk : kDiscrepancy;
      }
      const std::size_t limit_p = max_period ? max_period : std::max<std::size_t>(1, n / 3);
      if (auto d = detect_period(window, limit_p)) {
        out << "period " << d->period << " preperiod " << d->preperiod << '\n';
      } else {
        out << "no period up to " << limit_p << " within " << window.size() << " values\n";
      }
      return kOk;
    }
    if (*ls) {
      out << join(losing_paths(parse_variant(variant_name), limit)) << '\n';
      return kOk;
    }
    if (*st) {
      out << kStatsCsvHeader << '\n';
      for (auto size : stat_sizes) out << format_stats_row(fminus_stats(size)) << '\n';
      return kOk;
    }
    if (*au) {
      std::ofstream file;
      if (!report_path.empty()) {
        file.open(report_path);
        if (!file) {
          err << "cannot write " << report_path << '\n';
          return kUsage;
        }
      }
      std::ostream& sink = report_path.empty() ? out : file;
      Oracle oracle(OracleConfig{bound, std::max(bound, 1), 10});
      if (selective_report) {
        write_discrepancy_csv(sink, misere_selective_discrepancies(bound, oracle));
        return kOk;
      }
      std::vector<Variant> targets;
      if (variant_name == "all") {
        for (const auto& v : all_variants()) {
          if (has_solver(v)) targets.push_back(v);
        }
      } else {
        targets.push_back(parse_variant(variant_name));
      }
      bool failed = false;
      for (const auto& v : targets) {
        const DiscrepancyReport r = audit_variant(v, bound, oracle);
        write_report(sink, r);
        if (!r.clean() && is_certified(v)) failed = true;
        if (!report_path.empty() || targets.size() > 1) {
          err << v.name() << ": " << r.positions_checked << " positions, " << r.entries.size()
              << " discrepancies" << (is_certified(v) ? "" : " (calculus not certified)") << '\n';
        }
      }
      return failed ? kDiscrepancy : kOk;
    }
    if (*sv) {
      ApiService api;
      err << "listening on http://" << host << ':' << port << '\n';
      if (!serve(api, host, port)) {
        err << "cannot bind " << host << ':' << port << '\n';
        return kUsage;
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::BoundExceeded:
      case ErrorKind::InsufficientData:
        return kBound;
      default:
        return kUsage;
    }
  }
  return kUsage;
}

}  // namespace kayles::cli
