#include <sstream>

#include "doctest.h"
#include "kayles/error.hpp"
#include "kayles/oracle.hpp"
#include "kayles/selective.hpp"
#include "support/naive_tree.hpp"

using namespace kayles;

namespace {

Position P(std::initializer_list<PathLen> xs) { return Position::from_lengths(xs); }

}  // namespace

TEST_CASE("sigma of single paths") {
  CHECK(sigma_path(5, SigmaRule::SelNormal) == 0);
  CHECK(sigma_path(8, SigmaRule::SelMisere) == 0);
  CHECK(sigma_path(14, SigmaRule::ShortSelMisere) == 1);
  CHECK(sigma_path(7, SigmaRule::SelNormal) == 1);
}

TEST_CASE("sigma recursions equal the closed forms") {
  for (auto rule : {SigmaRule::SelNormal, SigmaRule::SelMisere, SigmaRule::ShortSelNormal,
                    SigmaRule::ShortSelMisere}) {
    const auto table = sigma_table(1000, rule);
    for (PathLen n = 0; n <= 1000; ++n) {
      CHECK(table[static_cast<std::size_t>(n)] == sigma_closed_form(n, rule));
    }
  }
}

TEST_CASE("sigma periodic structure") {
  for (PathLen n = 0; n <= 1000; ++n) {
    const bool five = n % 5 == 0 || n % 5 == 4;
    CHECK((sigma_path(n, SigmaRule::SelNormal) == 0) == five);
    CHECK((sigma_path(n, SigmaRule::ShortSelNormal) == 0) == five);
    CHECK((sigma_path(n, SigmaRule::SelMisere) == 0) == (n % 7 == 1 || n % 7 == 2));
    const bool small = n == 1 || n == 2 || n == 8 || n == 9;
    CHECK((sigma_path(n, SigmaRule::ShortSelMisere) == 0) == (small || (n >= 15 && five)));
  }
}

TEST_CASE("selective outcomes") {
  CHECK(sel_outcome(P({5, 10}), Play::Misere, Ending::Short) == Outcome::P);
  CHECK(sel_outcome(P({6, 10}), Play::Misere, Ending::Short) == Outcome::N);
  CHECK(sel_outcome(P({7}), Play::Normal, Ending::Long) == Outcome::N);
  CHECK(sel_outcome(P({5, 10}), Play::Normal, Ending::Long) == Outcome::P);
  CHECK(sel_outcome(P({}), Play::Normal, Ending::Long) == Outcome::P);
  CHECK(sel_outcome(P({}), Play::Misere, Ending::Long) == Outcome::N);
  CHECK(lambda_profile(P({6, 10, 13})).low_residues() == 2);
}

TEST_CASE("selective best moves") {
  auto after = [](const Position& p, Play play, Ending e) {
    return apply_move(p, sel_best_move(p, play, e), MoveRule::Selective);
  };
  CHECK(after(P({7}), Play::Normal, Ending::Long).successor == P({5}));
  const CompoundMove m = sel_best_move(P({6, 10}), Play::Misere, Ending::Short);
  REQUIRE(m.choices.size() == 1);
  CHECK(m.choices[0].component == 1);  // the 6-path sits after the 10-path
  CHECK(after(P({6, 10}), Play::Misere, Ending::Short).successor == P({10, 4}));
  const Transition t = after(P({1, 1, 5}), Play::Normal, Ending::Long);
  CHECK(t.successor == P({5}));
  CHECK(t.emptied_components == 2);
  CHECK_THROWS_AS(sel_best_move(P({5}), Play::Normal, Ending::Long), Error);
}

TEST_CASE("normal selective calculi agree with the naive tree") {
  naive::Tree tree;
  for (const auto& raw : naive::all_positions(10)) {
    const Position p = canonicalize(raw);
    CHECK((sel_outcome(p, Play::Normal, Ending::Long) == Outcome::N) ==
          tree.wins(raw, naive::Sel, false, false));
    CHECK((sel_outcome(p, Play::Normal, Ending::Short) == Outcome::N) ==
          tree.wins(raw, naive::Sel, true, false));
  }
}

TEST_CASE("short misere rule2 agrees with the naive tree") {
  naive::Tree tree;
  for (const auto& raw : naive::all_positions(10)) {
    const Position p = canonicalize(raw);
    CHECK((sel_rule2_outcome(p, Play::Misere, Ending::Short) == Outcome::N) ==
          tree.wins(raw, naive::Sel, true, true));
  }
}

TEST_CASE("misere selective discrepancy report") {
  Oracle oracle;
  const auto rows = misere_selective_discrepancies(10, oracle);
  const Variant sel_misere{MoveRule::Selective, Ending::Long, Play::Misere};
  bool has_11 = false;
  bool has_21 = false;
  std::size_t long_rows = 0;
  for (const auto& r : rows) {
    if (r.variant == sel_misere) {
      ++long_rows;
      if (r.position == P({1, 1})) has_11 = true;
      if (r.position == P({2, 1})) has_21 = true;
    }
    CHECK(r.position.total() <= 10);
    CHECK((r.calculus != r.oracle || r.calculus != r.rule2));
  }
  CHECK(has_11);
  CHECK(has_21);
  CHECK(long_rows >= 44);
  for (const auto& r : rows) {
    if (r.position == P({5})) FAIL("single path 5 listed");
  }

  std::ostringstream a;
  std::ostringstream b;
  write_discrepancy_csv(a, rows);
  Oracle fresh;
  write_discrepancy_csv(b, misere_selective_discrepancies(10, fresh));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("position,calculus,rule2,oracle,variant\n", 0) == 0);
  CHECK(a.str().find("\"1,1\",P,N,N,sel-misere") != std::string::npos);
}
