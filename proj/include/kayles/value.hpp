#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace kayles {

/// A natural-number game value, or Star: the undefined foreclosed value.
class GameValue {
 public:
  constexpr GameValue() = default;
  static constexpr GameValue nat(std::uint32_t n) { return GameValue(n); }
  static constexpr GameValue star() {
    GameValue v;
    v.star_ = true;
    return v;
  }

  constexpr bool is_star() const noexcept { return star_; }
  constexpr bool is_nat() const noexcept { return !star_; }
  /// Precondition: is_nat().
  constexpr std::uint32_t value() const noexcept { return n_; }

  constexpr bool operator==(const GameValue& o) const noexcept {
    return star_ == o.star_ && (star_ || n_ == o.n_);
  }

  /// "*" or the decimal value.
  std::string str() const;

 private:
  constexpr explicit GameValue(std::uint32_t n) : n_(n) {}

  std::uint32_t n_ = 0;
  bool star_ = false;
};

inline constexpr GameValue kStar = GameValue::star();

enum class StarMode {
  Absorb,   // x + * = *   (normal foreclosed)
  Neutral,  // x + * = x   (misere foreclosed)
};

/// Least natural number absent from the Nat members; Star entries are ignored.
std::uint32_t mex(std::span<const GameValue> vals);
std::uint32_t mex(std::initializer_list<GameValue> vals);

GameValue nim_sum(GameValue a, GameValue b, StarMode mode);

}  // namespace kayles
