#pragma once

#include <vector>

#include "kayles/position.hpp"
#include "kayles/variant.hpp"

namespace kayles {

// Continued conjunctive compound (long rule). A union's suspense number is
// the maximum over its parts.

std::vector<int> suspense_table(PathLen n, Play play);
int suspense_closed_form(PathLen n, Play play);
int suspense(PathLen n, Play play);

int ccc_suspense(const Position& p, Play play);
Outcome ccc_outcome(const Position& p, Play play);
CompoundMove ccc_best_move(const Position& p, Play play);

}  // namespace kayles
