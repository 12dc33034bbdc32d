#pragma once

#include <cstddef>
#include <cstdint>

#include "kayles/octal.hpp"
#include "kayles/position.hpp"
#include "kayles/variant.hpp"

namespace kayles {

// Diminished disjunctive compound: the game stops as soon as one path is
// emptied. Values are foreclosed Grundy numbers, Star on illegal positions.

/// F+ sequence, certified with period 84 from index 245.
const PeriodicSequence& fplus_table();
GameValue fplus(PathLen n);

/// F- values 0..limit (cached and grown on demand).
ValueSequence fminus_sequence(std::size_t limit);
/// Throws InsufficientData when n > limit.
GameValue fminus(PathLen n, std::size_t limit);

/// Foreclosed nim-sum of the position; Star if any component is Star.
GameValue ddc_value(const Position& p, Play play);
Outcome ddc_outcome(const Position& p, Play play);
CompoundMove ddc_best_move(const Position& p, Play play);

struct StatsRow {
  std::size_t n = 0;
  std::size_t nb_zero = 0;
  std::uint32_t max = 0;
  double mean = 0.0;
  double deviation = 0.0;  // mean absolute deviation about the mean
  std::uint32_t freq_value = 0;
  double pct_freq = 0.0;  // percent
  std::size_t max_zero = 0;
  std::size_t pos_max = 0;
};

/// Statistics of F- over [1, n]. FreqV and PosMax break ties toward the
/// smallest value / index.
StatsRow fminus_stats(std::size_t n);

/// Header line matching write_stats_row.
inline constexpr const char* kStatsCsvHeader =
    "n,NbZ,Max,Mean,Deviation,FreqV,PctFreqV,MaxZ,PosMax";
std::string format_stats_row(const StatsRow& row);

/// F-(P_n) == Grundy value of heap n-2 in 0.13337, for 2 <= n <= limit.
bool fminus_octal_check(std::size_t limit);

}  // namespace kayles
