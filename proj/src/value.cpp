#include "kayles/value.hpp"

#include <vector>

namespace kayles {

std::string GameValue::str() const { return star_ ? "*" : std::to_string(n_); }

std::uint32_t mex(std::span<const GameValue> vals) {
  std::vector<bool> seen(vals.size() + 1, false);
  for (const auto& v : vals) {
    if (v.is_nat() && v.value() < seen.size()) seen[v.value()] = true;
  }
  std::uint32_t m = 0;
  while (seen[m]) ++m;
  return m;
}

std::uint32_t mex(std::initializer_list<GameValue> vals) {
  return mex(std::span<const GameValue>(vals.begin(), vals.size()));
}

GameValue nim_sum(GameValue a, GameValue b, StarMode mode) {
  if (a.is_nat() && b.is_nat()) return GameValue::nat(a.value() ^ b.value());
  if (a.is_star() && b.is_star()) return kStar;
  if (mode == StarMode::Absorb) return kStar;
  return a.is_star() ? b : a;
}

}  // namespace kayles
