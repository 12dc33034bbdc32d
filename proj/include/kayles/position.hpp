#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kayles {

/// Number of vertices of a path P_n.
using PathLen = int;

/// A disjoint union of paths, stored as the multiset of path orders sorted in
/// descending order with empty paths removed.
class Position {
 public:
  Position() = default;

  /// Builds a canonical position; throws InvalidLength on a negative entry.
  static Position from_lengths(std::span<const PathLen> lengths);
  static Position from_lengths(std::initializer_list<PathLen> lengths) {
    return from_lengths(std::span<const PathLen>(lengths.begin(), lengths.size()));
  }
  static Position single(PathLen n) { return from_lengths({n}); }

  const std::vector<PathLen>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  PathLen operator[](std::size_t i) const { return parts_[i]; }
  int total() const noexcept;
  PathLen largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  PathLen smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  auto operator<=>(const Position&) const = default;
  bool operator==(const Position&) const = default;

 private:
  std::vector<PathLen> parts_;
};

/// Same as Position::from_lengths.
Position canonicalize(std::span<const PathLen> lengths);

/// "5,3,1" for non-empty positions, "-" for the empty one.
std::string format_position(const Position& p);
/// Accepts any order and surrounding whitespace; "-" or "" is the empty position.
Position parse_position(std::string_view text);

/// Left and right residual paths after deleting v and its neighbours from P_n.
std::pair<PathLen, PathLen> vertex_result(PathLen n, int v);

/// Distinct canonical options of a lone path P_n.
std::vector<Position> path_options(PathLen n);

/// The single option P_{n-3} of the cycle C_n.
Position cycle_option(PathLen n);

enum class MoveRule { Disjunctive, Conjunctive, Selective };

struct Choice {
  std::size_t component = 0;  // index into Position::parts()
  int vertex = 1;             // 1-based vertex of that path

  auto operator<=>(const Choice&) const = default;
  bool operator==(const Choice&) const = default;
};

/// Vertex selections of one compound move, sorted by component index.
struct CompoundMove {
  std::vector<Choice> choices;

  bool operator==(const CompoundMove&) const = default;
};

std::string format_move(const CompoundMove& m);  // "0:2 1:3"
CompoundMove parse_move(std::string_view text);

struct Transition {
  Position successor;
  int emptied_components = 0;

  bool operator==(const Transition&) const = default;
};

/// Validates the move against the rule's arity and vertex ranges, then applies
/// it. Throws IllegalMove with a readable reason.
Transition apply_move(const Position& p, const CompoundMove& m, MoveRule rule);

/// Every legal compound move at vertex granularity. Order: disjunctive is
/// component-major with ascending vertices; conjunctive is lexicographic in the
/// vertex tuple; selective walks component subsets by ascending bitmask.
std::vector<std::pair<CompoundMove, Transition>> compound_moves(const Position& p,
                                                                MoveRule rule);

/// The first element of compound_moves without building the whole list.
CompoundMove first_legal_move(const Position& p, MoveRule rule);

/// Vertex that deletes every vertex of P_n (n in 1..3), or 0 if none exists.
int emptying_vertex(PathLen n);

}  // namespace kayles

template <>
struct std::hash<kayles::Position> {
  std::size_t operator()(const kayles::Position& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : p.parts()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
