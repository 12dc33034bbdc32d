#include <set>

#include "doctest.h"
#include "kayles/disjunctive.hpp"
#include "kayles/error.hpp"
#include "kayles/oracle.hpp"
#include "support/naive_tree.hpp"

using namespace kayles;

namespace {

Position P(std::initializer_list<PathLen> xs) { return Position::from_lengths(xs); }

const Variant kNormal{MoveRule::Disjunctive, Ending::Long, Play::Normal};
const Variant kMisere{MoveRule::Disjunctive, Ending::Long, Play::Misere};

}  // namespace

TEST_CASE("rho values") {
  CHECK(rho(4) == 0);
  CHECK(rho(3) == 2);
  CHECK(rho(76) == 0);
  CHECK(rho(0) == 0);
}

TEST_CASE("rho zeros form five progressions mod 34 after 42") {
  std::set<PathLen> zeros;
  for (PathLen n = 0; n <= 500; ++n) {
    if (rho(n) == 0) zeros.insert(n);
  }
  std::set<PathLen> expected{0, 4, 8, 14, 20, 24, 28, 34, 38, 42};
  for (PathLen base : {54, 58, 62, 72, 76}) {
    for (PathLen n = base; n <= 500; n += 34) expected.insert(n);
  }
  CHECK(zeros == expected);
  CHECK(rho(19) == 3);
}

TEST_CASE("disjunctive normal outcomes") {
  CHECK(disj_normal_outcome(P({4, 4})) == Outcome::P);
  CHECK(disj_normal_outcome(P({3})) == Outcome::N);
  CHECK(disj_normal_outcome(P({8, 4})) == Outcome::P);
  CHECK(disj_normal_outcome(P({})) == Outcome::P);
  CHECK(rho_nim_sum(P({3, 1})) == 3);
}

TEST_CASE("disjunctive normal best moves") {
  CHECK(format_move(disj_normal_best_move(P({1}))) == "0:1");
  const CompoundMove m = disj_normal_best_move(P({4, 3}));
  CHECK(apply_move(P({4, 3}), m, MoveRule::Disjunctive).successor == P({4}));
  const CompoundMove k = disj_normal_best_move(P({8, 3, 2}));
  CHECK(disj_normal_outcome(apply_move(P({8, 3, 2}), k, MoveRule::Disjunctive).successor) ==
        Outcome::P);
  CHECK_THROWS_AS(disj_normal_best_move(P({4})), Error);
}

TEST_CASE("disjunctive normal agrees with the naive tree") {
  naive::Tree tree;
  for (const auto& raw : naive::all_positions(14)) {
    const bool wins = tree.wins(raw, naive::Disj, false, false);
    CHECK((disj_normal_outcome(canonicalize(raw)) == Outcome::N) == wins);
  }
}

TEST_CASE("disjunctive misere through the oracle") {
  CHECK(disj_misere_outcome(P({1}), 20) == Outcome::P);
  CHECK_THROWS_AS(disj_misere_outcome(P({25}), 20), Error);
  naive::Tree tree;
  for (const auto& raw : naive::all_positions(12)) {
    const bool wins = tree.wins(raw, naive::Disj, false, true);
    CHECK((disj_misere_outcome(canonicalize(raw), 16) == Outcome::N) == wins);
  }
  // The mover clears one P_2 and leaves the last move to the opponent.
  CHECK(disj_misere_outcome(P({2, 2}), 16) == Outcome::N);
}
