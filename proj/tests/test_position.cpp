#include <set>

#include "doctest.h"
#include "kayles/error.hpp"
#include "kayles/position.hpp"
#include "kayles/variant.hpp"
#include "support/naive_tree.hpp"

using namespace kayles;

namespace {

Position P(std::initializer_list<PathLen> xs) { return Position::from_lengths(xs); }

std::set<Position> option_set(PathLen n) {
  auto v = path_options(n);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("canonical form drops zeros and sorts descending") {
  CHECK(P({0}).empty());
  CHECK(P({3, 5, 3}).parts() == std::vector<PathLen>{5, 3, 3});
  CHECK(P({5, 0, 1}).parts() == std::vector<PathLen>{5, 1});
  CHECK(P({1, 2, 3}) == P({3, 1, 2}));
  CHECK(P({4, 1}).total() == 5);
  CHECK_THROWS_AS(P({2, -1}), Error);
  try {
    P({-3});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidLength);
  }
}

TEST_CASE("canonicalize is idempotent") {
  for (const auto& raw : naive::all_positions(9)) {
    auto once = canonicalize(raw);
    CHECK(canonicalize(once.parts()) == once);
  }
}

TEST_CASE("position text round trip") {
  CHECK(format_position(P({3, 5, 1})) == "5,3,1");
  CHECK(format_position(Position{}) == "-");
  CHECK(parse_position(" 1, 5 ,3") == P({5, 3, 1}));
  CHECK(parse_position("-").empty());
  CHECK(parse_position("").empty());
  CHECK_THROWS_AS(parse_position("3,x"), Error);
  CHECK_THROWS_AS(parse_position("3,-2"), Error);
}

TEST_CASE("vertex_result") {
  CHECK(vertex_result(3, 2) == std::pair<PathLen, PathLen>{0, 0});
  CHECK(vertex_result(6, 3) == std::pair<PathLen, PathLen>{1, 2});
  CHECK(vertex_result(5, 1) == std::pair<PathLen, PathLen>{0, 3});
  CHECK(vertex_result(1, 1) == std::pair<PathLen, PathLen>{0, 0});
  CHECK_THROWS_AS(vertex_result(5, 0), Error);
  CHECK_THROWS_AS(vertex_result(5, 6), Error);
}

TEST_CASE("path options of small paths") {
  CHECK(option_set(3) == std::set<Position>{P({}), P({1})});
  CHECK(option_set(6) == std::set<Position>{P({4}), P({3}), P({2, 1})});
  CHECK(option_set(0).empty());
  CHECK(option_set(1) == std::set<Position>{P({})});
  CHECK(option_set(2) == std::set<Position>{P({})});
}

TEST_CASE("path options follow the split formula") {
  for (PathLen n = 3; n <= 60; ++n) {
    std::set<Position> expected{P({n - 2}), P({n - 3})};
    for (PathLen i = 1; i <= (n - 3) / 2; ++i) expected.insert(P({i, n - 3 - i}));
    CHECK(option_set(n) == expected);
    if (n >= 4) CHECK(static_cast<int>(option_set(n).size()) == (n - 1) / 2 + 1);
  }
}

TEST_CASE("cycle option") {
  CHECK(cycle_option(3).empty());
  CHECK(cycle_option(10) == P({7}));
  CHECK(cycle_option(4) == P({1}));
  CHECK_THROWS_AS(cycle_option(2), Error);
}

TEST_CASE("compound moves on tiny positions") {
  auto d = compound_moves(P({1}), MoveRule::Disjunctive);
  REQUIRE(d.size() == 1);
  CHECK(d[0].second == Transition{P({}), 1});

  auto c = compound_moves(P({1, 1}), MoveRule::Conjunctive);
  REQUIRE(c.size() == 1);
  CHECK(c[0].first.choices.size() == 2);
  CHECK(c[0].second == Transition{P({}), 2});

  auto s = compound_moves(P({1, 1}), MoveRule::Selective);
  REQUIRE(s.size() == 3);
  int singles = 0;
  for (const auto& [m, t] : s) {
    if (m.choices.size() == 1) {
      ++singles;
      CHECK(t == Transition{P({1}), 1});
    } else {
      CHECK(t == Transition{P({}), 2});
    }
  }
  CHECK(singles == 2);
  CHECK_THROWS_AS(compound_moves(P({}), MoveRule::Selective), Error);
}

TEST_CASE("disjunctive successors replace one component by one of its options") {
  for (const auto& raw : naive::all_positions(12)) {
    const Position p = canonicalize(raw);
    if (p.empty()) continue;
    std::set<Position> got;
    for (const auto& [m, t] : compound_moves(p, MoveRule::Disjunctive)) got.insert(t.successor);
    std::set<Position> expected;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (const auto& o : path_options(p[i])) {
        std::vector<PathLen> parts = p.parts();
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        parts.insert(parts.end(), o.parts().begin(), o.parts().end());
        expected.insert(canonicalize(parts));
      }
    }
    CHECK(got == expected);
  }
}

TEST_CASE("move arity per rule") {
  const Position p = P({4, 2});
  for (const auto& [m, t] : compound_moves(p, MoveRule::Disjunctive)) CHECK(m.choices.size() == 1);
  for (const auto& [m, t] : compound_moves(p, MoveRule::Conjunctive)) CHECK(m.choices.size() == 2);
  std::size_t n_sel = 0;
  for (const auto& [m, t] : compound_moves(p, MoveRule::Selective)) {
    CHECK(!m.choices.empty());
    ++n_sel;
  }
  // 4 + 2 singles, 4 * 2 pairs
  CHECK(compound_moves(p, MoveRule::Disjunctive).size() == 6);
  CHECK(compound_moves(p, MoveRule::Conjunctive).size() == 8);
  CHECK(n_sel == 14);
}

TEST_CASE("emptied components are exactly the short paths cleared in one move") {
  for (const auto& raw : naive::all_positions(8)) {
    const Position p = canonicalize(raw);
    if (p.empty()) continue;
    for (const auto& [m, t] : compound_moves(p, MoveRule::Selective)) {
      int expected = 0;
      for (const auto& c : m.choices) {
        const PathLen n = p[c.component];
        if (n <= 2 || (n == 3 && c.vertex == 2)) ++expected;
      }
      CHECK(t.emptied_components == expected);
    }
  }
}

TEST_CASE("apply_move rejects malformed moves") {
  const Position p = P({5, 3});
  auto bad = [&](const char* text, MoveRule r) {
    CHECK_THROWS_AS(apply_move(p, parse_move(text), r), Error);
  };
  bad("0:1 1:1", MoveRule::Disjunctive);
  bad("0:1", MoveRule::Conjunctive);
  bad("0:6", MoveRule::Selective);
  bad("2:1", MoveRule::Selective);
  bad("0:1 0:2", MoveRule::Selective);
  CHECK_THROWS_AS(apply_move(P({}), parse_move("0:1"), MoveRule::Disjunctive), Error);
  CHECK(apply_move(p, parse_move("1:2 0:3"), MoveRule::Conjunctive).successor == P({1, 1}));
}

TEST_CASE("move text round trip") {
  const CompoundMove m = parse_move("1:3 0:2");
  CHECK(format_move(m) == "0:2 1:3");
  CHECK_THROWS_AS(parse_move("0-2"), Error);
  CHECK_THROWS_AS(parse_move(""), Error);
}

TEST_CASE("first legal move is the head of the enumeration") {
  for (const auto& raw : naive::all_positions(7)) {
    const Position p = canonicalize(raw);
    if (p.empty()) continue;
    for (auto rule : {MoveRule::Disjunctive, MoveRule::Conjunctive, MoveRule::Selective}) {
      CHECK(first_legal_move(p, rule) == compound_moves(p, rule).front().first);
    }
  }
}

TEST_CASE("variants") {
  CHECK(all_variants().size() == 12);
  std::set<std::string> names;
  std::set<int> indices;
  for (const auto& v : all_variants()) {
    names.insert(v.name());
    indices.insert(v.index());
    CHECK(parse_variant(v.name()) == v);
  }
  CHECK(names.size() == 12);
  CHECK(indices.size() == 12);
  CHECK(names.count("ddc-misere") == 1);
  CHECK(parse_variant("conj-normal").ending == Ending::Short);
  CHECK(parse_variant("ccc-normal").ending == Ending::Long);
  CHECK(parse_variant("ssc-misere").conway_name() == "shortened selective compound, misere play");
  CHECK_THROWS_AS(parse_variant("kayles"), Error);
}

TEST_CASE("ending rules") {
  CHECK(ends_game({P({}), 1}, Ending::Long));
  CHECK_FALSE(ends_game({P({2}), 1}, Ending::Long));
  CHECK(ends_game({P({2}), 1}, Ending::Short));
  CHECK_FALSE(ends_game({P({2}), 0}, Ending::Short));
}
