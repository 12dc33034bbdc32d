#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "kayles/position.hpp"
#include "kayles/variant.hpp"

namespace kayles {

class Oracle;

enum class SigmaRule { SelNormal, SelMisere, ShortSelNormal, ShortSelMisere };

SigmaRule sigma_rule(Play play, Ending ending);

/// sigma(P_0..P_n) from sigma(G) = 1 - min sigma(G'), with unions evaluated by
/// boolean OR and sigma(ended) = 0 (normal) or 1 (misere).
std::vector<int> sigma_table(PathLen n, SigmaRule rule);
int sigma_closed_form(PathLen n, SigmaRule rule);
int sigma_path(PathLen n, SigmaRule rule);

struct LambdaProfile {
  std::array<int, 5> counts{};  // components by order mod 5

  int low_residues() const { return counts[1] + counts[2] + counts[3]; }
};
LambdaProfile lambda_profile(const Position& p);

/// Outcome under the sigma calculus. Misere long: OR of period-7 values.
/// Misere short: single path by table, two or more paths by the mod-5 profile.
Outcome sel_outcome(const Position& p, Play play, Ending ending);

/// The rule stated in prose for the misere selective compounds: long ending
/// uses normal play until one component remains; short ending requires every
/// component to be losing on its own.
Outcome sel_rule2_outcome(const Position& p, Play play, Ending ending);

/// Plays in exactly the components that are winning under the calculus and
/// sends each to a losing residue. Throws NotWinnable on P-positions.
CompoundMove sel_best_move(const Position& p, Play play, Ending ending);

struct SelectiveDiscrepancy {
  Position position;
  Variant variant;
  Outcome calculus;
  Outcome rule2;
  Outcome oracle;
};

/// Every position of total <= bound where calculus, rule2 and the game tree
/// do not all agree, for (SELECTIVE, LONG, MISERE) and (SELECTIVE, SHORT,
/// MISERE). Ordered by variant, then enumeration order.
std::vector<SelectiveDiscrepancy> misere_selective_discrepancies(int bound, Oracle& oracle);

/// CSV "position,calculus,rule2,oracle,variant".
void write_discrepancy_csv(std::ostream& out, const std::vector<SelectiveDiscrepancy>& rows);

}  // namespace kayles
