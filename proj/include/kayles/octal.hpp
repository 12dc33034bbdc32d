#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kayles/value.hpp"

namespace kayles {

/// Take-and-break rules in octal notation: digits[k-1] describes removing k
/// tokens. Bit 1: may remove a whole heap of exactly k; bit 2: may leave one
/// heap; bit 4: may leave two non-empty heaps.
class OctalCode {
 public:
  /// Parses "0.137"-style codes. Throws Parse on malformed input or all-zero digits.
  static OctalCode parse(std::string_view text);

  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  /// Largest number of tokens removable in one move.
  int max_removal() const noexcept { return static_cast<int>(digits_.size()); }
  std::string str() const;

 private:
  std::vector<std::uint8_t> digits_;
};

/// Append-only sequence of values indexed from 0.
struct ValueSequence {
  std::string kind;  // "rho", "fplus", "octal 0.13337", ...
  std::vector<GameValue> values;

  std::size_t size() const noexcept { return values.size(); }
  const GameValue& operator[](std::size_t i) const { return values[i]; }
};

struct PeriodDescriptor {
  std::size_t preperiod = 0;  // q
  std::size_t period = 1;     // p

  bool operator==(const PeriodDescriptor&) const = default;
};

/// Grundy values of heaps 0..n under the octal code.
ValueSequence octal_grundy(const OctalCode& code, std::size_t n);

/// Checks seq[i+p] == seq[i] for q <= i <= 2q+p+slack. With slack = (largest
/// removal) - 1 a true result certifies the period for every i >= q.
/// Throws InsufficientData if seq is too short for the window.
bool guy_smith_check(const ValueSequence& seq, std::size_t period,
                     std::size_t preperiod, std::size_t slack = 2);

/// Smallest (q, p), preferring q, with p <= max_period that passes
/// guy_smith_check within the computed range.
std::optional<PeriodDescriptor> detect_period(const ValueSequence& seq,
                                              std::size_t max_period,
                                              std::size_t slack = 2);

/// A computed sequence plus an optional certified period. Lookups past the
/// computed range wrap through the period only once it has been certified.
class PeriodicSequence {
 public:
  PeriodicSequence() = default;
  explicit PeriodicSequence(ValueSequence seq) : seq_(std::move(seq)) {}

  /// Runs guy_smith_check and, on success, enables periodic extension.
  bool certify(std::size_t period, std::size_t preperiod, std::size_t slack = 2);

  bool certified() const noexcept { return period_.has_value(); }
  const std::optional<PeriodDescriptor>& period() const noexcept { return period_; }
  const ValueSequence& sequence() const noexcept { return seq_; }

  /// Throws InsufficientData beyond the computed range of an uncertified sequence.
  GameValue at(std::size_t n) const;

 private:
  ValueSequence seq_;
  std::optional<PeriodDescriptor> period_;
};

/// "n,value" header, one row per index, Star as "*".
void write_csv(std::ostream& out, const ValueSequence& seq);

}  // namespace kayles
