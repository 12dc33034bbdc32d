#pragma once

#include <cstdint>

#include "kayles/octal.hpp"
#include "kayles/position.hpp"
#include "kayles/variant.hpp"

namespace kayles {

/// Grundy sequence of 0.137 (Node-Kayles on P_n), certified periodic.
const PeriodicSequence& rho_table();

std::uint32_t rho(PathLen n);
std::uint32_t rho_nim_sum(const Position& p);

Outcome disj_normal_outcome(const Position& p);

/// Scans components in canonical order and vertices in ascending order; returns
/// the first move to a zero nim-sum. Throws NotWinnable on P-positions.
CompoundMove disj_normal_best_move(const Position& p);

/// Exhaustive search; throws BoundExceeded when p.total() > bound.
Outcome disj_misere_outcome(const Position& p, int bound);

}  // namespace kayles
