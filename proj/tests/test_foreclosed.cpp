#include <string>

#include "doctest.h"
#include "kayles/error.hpp"
#include "kayles/foreclosed.hpp"
#include "kayles/octal.hpp"
#include "support/naive_tree.hpp"

using namespace kayles;

namespace {

Position P(std::initializer_list<PathLen> xs) { return Position::from_lengths(xs); }

GameValue N(std::uint32_t n) { return GameValue::nat(n); }

// F+ for n = 0..339, '*' for Star.
const char* const kFplusDigits =
    "****001120" "0112031122" "3112334105" "3415534255" "3225532255"
    "0225042253" "4423344253" "4455341553" "4285322853" "4285442804"
    "4283442234" "4253345533" "1253322533" "2253422534" "2253422334"
    "2233425334" "4533425532" "2553425544" "2554425344" "2234425334"
    "5533125342" "2533225342" "2534225342" "2334223342" "5334453342"
    "5532255342" "5344255442" "5344253442" "5334553342" "5342253322"
    "5342253422" "5342233422" "3342533425" "3342553225";

}  // namespace

TEST_CASE("fplus matches the table digits") {
  const std::string digits = kFplusDigits;
  REQUIRE(digits.size() == 340);
  for (std::size_t n = 0; n < digits.size(); ++n) {
    const GameValue expected =
        digits[n] == '*' ? kStar : N(static_cast<std::uint32_t>(digits[n] - '0'));
    CHECK_MESSAGE(fplus(static_cast<PathLen>(n)) == expected, "n = " << n);
  }
  CHECK(fplus(4) == N(0));
  CHECK(fplus(6) == N(1));
  CHECK(fplus(102) == N(8));
}

TEST_CASE("fplus is certified periodic") {
  CHECK(fplus_table().certified());
  CHECK(*fplus_table().period() == PeriodDescriptor{245, 84});
  for (PathLen n = 245; n < 2000; ++n) CHECK(fplus(n + 84) == fplus(n));
}

TEST_CASE("fminus base values") {
  CHECK(fminus(0, 10) == kStar);
  CHECK(fminus(1, 10) == N(0));
  CHECK(fminus(2, 10) == N(0));
  CHECK(fminus(3, 10) == N(1));
  CHECK(fminus(4, 10) == N(1));
  CHECK(fminus(9, 10) == N(4));
  CHECK_THROWS_AS(fminus(11, 10), Error);
}

TEST_CASE("fminus frozen prefix") {
  // F-(P_1..P_79) from an independent brute force.
  const std::vector<std::uint32_t> expected = {
      0, 0, 1, 1, 2, 2, 3, 0, 4, 1, 1, 2, 5,  3, 3, 4, 1, 1, 2, 5, 3, 0, 4, 4, 2, 1, 1,
      3, 3, 4, 4, 2, 1, 1, 5, 6, 3, 2, 2, 8,  1, 5, 6, 0, 7, 2, 2, 5, 5, 8, 9, 7, 4, 2,
      5, 5, 10, 9, 4, 2, 11, 5, 5, 10, 3, 4, 4, 7, 5, 5, 10, 9, 4, 4, 7, 8, 6, 5, 10};
  const auto seq = fminus_sequence(expected.size());
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(seq[n] == N(expected[n - 1]));
}

TEST_CASE("diminished disjunctive outcomes") {
  CHECK(ddc_outcome(P({4, 4}), Play::Normal) == Outcome::P);
  CHECK(ddc_outcome(P({3, 100}), Play::Normal) == Outcome::N);
  CHECK(ddc_outcome(P({1}), Play::Misere) == Outcome::P);
  CHECK(ddc_outcome(P({}), Play::Normal) == Outcome::P);
  CHECK(ddc_outcome(P({}), Play::Misere) == Outcome::N);
  CHECK(ddc_value(P({6, 3}), Play::Normal) == kStar);
  CHECK(ddc_value(P({6, 3}), Play::Misere) == N(2 ^ 1));
}

TEST_CASE("diminished disjunctive best moves") {
  CHECK(format_move(ddc_best_move(P({3}), Play::Normal)) == "0:2");
  const CompoundMove m = ddc_best_move(P({6, 4}), Play::Normal);
  const Transition t = apply_move(P({6, 4}), m, MoveRule::Disjunctive);
  CHECK(t.emptied_components == 0);
  CHECK(ddc_outcome(t.successor, Play::Normal) == Outcome::P);
  const Transition k = apply_move(P({3}), ddc_best_move(P({3}), Play::Misere), MoveRule::Disjunctive);
  CHECK(k.successor == P({1}));
  CHECK_THROWS_AS(ddc_best_move(P({5, 4}), Play::Normal), Error);
}

TEST_CASE("diminished disjunctive agrees with the naive tree") {
  naive::Tree tree;
  for (const auto& raw : naive::all_positions(13)) {
    const Position p = canonicalize(raw);
    CHECK((ddc_outcome(p, Play::Normal) == Outcome::N) == tree.wins(raw, naive::Disj, true, false));
    CHECK((ddc_outcome(p, Play::Misere) == Outcome::N) == tree.wins(raw, naive::Disj, true, true));
  }
}

TEST_CASE("fminus statistics on small intervals") {
  const StatsRow r10 = fminus_stats(10);
  CHECK(r10.nb_zero == 3);
  CHECK(r10.max == 4);
  CHECK(r10.mean == doctest::Approx(1.4));
  CHECK(r10.deviation == doctest::Approx(1.08));
  CHECK(r10.freq_value == 0);
  CHECK(r10.pct_freq == doctest::Approx(30.0));
  CHECK(r10.max_zero == 8);
  CHECK(r10.pos_max == 9);

  const StatsRow r100 = fminus_stats(100);
  CHECK(r100.nb_zero == 8);
  CHECK(r100.max == 11);
  CHECK(r100.mean == doctest::Approx(4.23));
  CHECK(r100.deviation == doctest::Approx(2.4114));
  CHECK(r100.freq_value == 2);
  CHECK(r100.max_zero == 98);
  CHECK(r100.pos_max == 61);

  const StatsRow r1000 = fminus_stats(1000);
  CHECK(r1000.nb_zero == 11);
  CHECK(r1000.max == 43);
  CHECK(r1000.freq_value == 16);
  CHECK(r1000.max_zero == 148);
  CHECK(r1000.pos_max == 999);
}

TEST_CASE("stats row formatting") {
  CHECK(format_stats_row(fminus_stats(10)) == "10,3,4,1.400000,1.080000,0,30.0000,8,9");
  CHECK(std::string(kStatsCsvHeader) == "n,NbZ,Max,Mean,Deviation,FreqV,PctFreqV,MaxZ,PosMax");
}

TEST_CASE("fminus equals 0.13337 shifted by two") {
  CHECK(fminus_octal_check(2));
  CHECK(fminus_octal_check(50));
  CHECK(fminus_octal_check(2000));
}
