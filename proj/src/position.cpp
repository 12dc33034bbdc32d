#include "kayles/position.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "kayles/error.hpp"

namespace kayles {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLength: return "InvalidLength";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::NoMoves: return "NoMoves";
    case ErrorKind::NotWinnable: return "NotWinnable";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Position Position::from_lengths(std::span<const PathLen> lengths) {
  Position p;
  p.parts_.reserve(lengths.size());
  for (PathLen n : lengths) {
    if (n < 0) {
      throw Error(ErrorKind::InvalidLength, "negative path length " + std::to_string(n));
    }
    if (n > 0) p.parts_.push_back(n);
  }
  std::sort(p.parts_.begin(), p.parts_.end(), std::greater<>());
  return p;
}

int Position::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Position canonicalize(std::span<const PathLen> lengths) {
  return Position::from_lengths(lengths);
}

std::string format_position(const Position& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::Parse, "bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Position parse_position(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "-") return {};
  std::vector<PathLen> lengths;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    int n = parse_int(token, "path length");
    if (n <= 0) {
      throw Error(ErrorKind::Parse, "path lengths must be positive, got " + std::to_string(n));
    }
    lengths.push_back(n);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Position::from_lengths(lengths);
}

std::pair<PathLen, PathLen> vertex_result(PathLen n, int v) {
  if (v < 1 || v > n) {
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v) + " not in P_" + std::to_string(n));
  }
  return {std::max(v - 2, 0), std::max(n - v - 1, 0)};
}

std::vector<Position> path_options(PathLen n) {
  std::vector<Position> out;
  for (int v = 1; v <= n; ++v) {
    auto [a, b] = vertex_result(n, v);
    auto p = Position::from_lengths({a, b});
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

Position cycle_option(PathLen n) {
  if (n < 3) {
    throw Error(ErrorKind::InvalidLength, "cycles need at least 3 vertices");
  }
  return Position::single(n - 3);
}

int emptying_vertex(PathLen n) {
  switch (n) {
    case 1: return 1;
    case 2: return 1;
    case 3: return 2;
    default: return 0;
  }
}

std::string format_move(const CompoundMove& m) {
  std::string out;
  for (const auto& c : m.choices) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c.component) + ':' + std::to_string(c.vertex);
  }
  return out;
}

CompoundMove parse_move(std::string_view text) {
  CompoundMove m;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::Parse, "expected component:vertex, got '" + token + "'");
    }
    int component = parse_int(std::string_view(token).substr(0, colon), "component index");
    int vertex = parse_int(std::string_view(token).substr(colon + 1), "vertex");
    if (component < 0) throw Error(ErrorKind::Parse, "negative component index");
    m.choices.push_back({static_cast<std::size_t>(component), vertex});
  }
  if (m.choices.empty()) throw Error(ErrorKind::Parse, "empty move");
  std::sort(m.choices.begin(), m.choices.end());
  return m;
}

Transition apply_move(const Position& p, const CompoundMove& move, MoveRule rule) {
  auto illegal = [](const std::string& why) { return Error(ErrorKind::IllegalMove, why); };
  if (p.empty()) throw illegal("the game has ended");
  auto choices = move.choices;
  std::sort(choices.begin(), choices.end());
  if (choices.empty()) throw illegal("a move must select at least one vertex");
  for (std::size_t i = 1; i < choices.size(); ++i) {
    if (choices[i].component == choices[i - 1].component) {
      throw illegal("component " + std::to_string(choices[i].component) + " selected twice");
    }
  }
  switch (rule) {
    case MoveRule::Disjunctive:
      if (choices.size() != 1) throw illegal("disjunctive moves play in exactly one component");
      break;
    case MoveRule::Conjunctive:
      if (choices.size() != p.size()) throw illegal("conjunctive moves play in every component");
      break;
    case MoveRule::Selective:
      break;
  }

  std::vector<PathLen> parts;
  parts.reserve(p.size() + choices.size());
  Transition t;
  std::size_t next = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (next < choices.size() && choices[next].component == i) {
      int v = choices[next].vertex;
      if (v < 1 || v > p[i]) {
        throw illegal("vertex " + std::to_string(v) + " is not in component " +
                      std::to_string(i) + " (P_" + std::to_string(p[i]) + ")");
      }
      auto [a, b] = vertex_result(p[i], v);
      if (a == 0 && b == 0) ++t.emptied_components;
      parts.push_back(a);
      parts.push_back(b);
      ++next;
    } else {
      parts.push_back(p[i]);
    }
  }
  if (next != choices.size()) {
    throw illegal("component " + std::to_string(choices[next].component) + " does not exist");
  }
  t.successor = Position::from_lengths(parts);
  return t;
}

namespace {

// Odometer over vertex tuples for the given components.
template <typename Visit>
void for_each_vertex_tuple(const Position& p, const std::vector<std::size_t>& comps, Visit visit) {
  CompoundMove m;
  for (auto c : comps) m.choices.push_back({c, 1});
  while (true) {
    visit(m);
    std::size_t k = m.choices.size();
    while (k > 0) {
      auto& ch = m.choices[k - 1];
      if (ch.vertex < p[ch.component]) {
        ++ch.vertex;
        break;
      }
      ch.vertex = 1;
      --k;
    }
    if (k == 0) return;
  }
}

}  // namespace

std::vector<std::pair<CompoundMove, Transition>> compound_moves(const Position& p,
                                                                MoveRule rule) {
  if (p.empty()) throw Error(ErrorKind::NoMoves, "no moves from the empty position");
  std::vector<std::pair<CompoundMove, Transition>> out;
  auto emit = [&](const CompoundMove& m) { out.emplace_back(m, apply_move(p, m, rule)); };
  switch (rule) {
    case MoveRule::Disjunctive:
      for (std::size_t i = 0; i < p.size(); ++i) for_each_vertex_tuple(p, {i}, emit);
      break;
    case MoveRule::Conjunctive: {
      std::vector<std::size_t> all(p.size());
      std::iota(all.begin(), all.end(), std::size_t{0});
      for_each_vertex_tuple(p, all, emit);
      break;
    }
    case MoveRule::Selective: {
      if (p.size() > 20) {
        throw Error(ErrorKind::BoundExceeded, "too many components for selective enumeration");
      }
      for (std::uint32_t mask = 1; mask < (1u << p.size()); ++mask) {
        std::vector<std::size_t> comps;
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (mask & (1u << i)) comps.push_back(i);
        }
        for_each_vertex_tuple(p, comps, emit);
      }
      break;
    }
  }
  return out;
}

CompoundMove first_legal_move(const Position& p, MoveRule rule) {
  if (p.empty()) throw Error(ErrorKind::NoMoves, "no moves from the empty position");
  CompoundMove m;
  if (rule == MoveRule::Conjunctive) {
    for (std::size_t i = 0; i < p.size(); ++i) m.choices.push_back({i, 1});
  } else {
    m.choices.push_back({0, 1});
  }
  return m;
}

}  // namespace kayles
