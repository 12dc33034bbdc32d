#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kayles/oracle.hpp"
#include "kayles/position.hpp"
#include "kayles/value.hpp"
#include "kayles/variant.hpp"

namespace kayles {

/// Outcome plus the value that decided it.
struct Analysis {
  Outcome outcome = Outcome::P;
  std::string measure;            // nim-sum, foreclosed, remoteness, suspense, sigma, oracle
  std::optional<GameValue> value;  // aggregate value when the calculus has one
  std::vector<GameValue> components;
  bool immediate_end = false;  // a component can be ended by a winning move

  /// "remoteness 4", "sigma 0,1", "foreclosed *", ...
  std::string summary() const;
};

/// Every variant except disjunctive misere has a closed-form solver.
bool has_solver(Variant v);
/// The nine variants whose solver is certified equal to the game tree.
bool is_certified(Variant v);

/// Fast-solver analysis; disjunctive misere goes to the oracle.
Analysis analyze(Variant v, const Position& p, Oracle& oracle = shared_oracle());

/// Winning move from the variant's solver (oracle for disjunctive misere).
CompoundMove best_move(Variant v, const Position& p, Oracle& oracle = shared_oracle());

/// Move the engine plays: a winning move when one is known, otherwise the
/// first legal move. Misere variants without a tree-exact calculus consult the
/// oracle while the position is within its bound.
CompoundMove engine_move(Variant v, const Position& p, Oracle& oracle = shared_oracle());

}  // namespace kayles
