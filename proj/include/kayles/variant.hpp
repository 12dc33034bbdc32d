#pragma once

#include <array>
#include <string>
#include <string_view>

#include "kayles/position.hpp"

namespace kayles {

enum class Ending { Long, Short };
enum class Play { Normal, Misere };

/// One of Conway's twelve compound conventions.
struct Variant {
  MoveRule move_rule = MoveRule::Disjunctive;
  Ending ending = Ending::Long;
  Play play = Play::Normal;

  bool operator==(const Variant&) const = default;

  /// disj-normal, ddc-misere, conj-normal, ccc-misere, sel-normal, ssc-misere, ...
  std::string name() const;
  /// "diminished disjunctive compound, misere play" and so on.
  std::string conway_name() const;
  /// Dense index in [0, 12).
  int index() const;
};

const std::array<Variant, 12>& all_variants();
/// Throws Parse on an unknown name.
Variant parse_variant(std::string_view name);

enum class Outcome { P, N };

inline char to_char(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }
inline Outcome flip(Outcome o) { return o == Outcome::P ? Outcome::N : Outcome::P; }

/// True when a move with this transition ends the game.
bool ends_game(const Transition& t, Ending ending);

/// Whether the player who made a game-ending move wins.
inline bool ender_wins(Play play) { return play == Play::Normal; }

}  // namespace kayles
