#pragma once

#include <vector>

#include "kayles/position.hpp"
#include "kayles/variant.hpp"

namespace kayles {

// Conjunctive compound (short rule). A union's remoteness is the minimum of
// its parts' remotenesses.

/// Remoteness of P_0..P_n by direct recursion over path options.
std::vector<int> remoteness_table(PathLen n, Play play);
int remoteness_closed_form(PathLen n, Play play);
/// Table lookup within the recursion cap, closed form beyond it.
int remoteness(PathLen n, Play play);

int conj_remoteness(const Position& p, Play play);
Outcome conj_outcome(const Position& p, Play play);
CompoundMove conj_best_move(const Position& p, Play play);

}  // namespace kayles
