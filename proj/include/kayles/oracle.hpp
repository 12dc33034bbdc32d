#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "kayles/position.hpp"
#include "kayles/variant.hpp"

namespace kayles {

struct OracleConfig {
  int max_total = 16;
  int max_components = 16;
  /// Vertex-level selective enumeration (best_moves) refuses more components.
  int max_selective_components = 10;
};

/// Defaults, with KAYLES_ORACLE_BOUND overriding max_total when set.
OracleConfig default_oracle_config();

/// Calls visit(successor, emptied) for the compound moves of p, up to
/// symmetry: equal-length parts are grouped and a path's mirror-image vertices
/// are merged, so permuted choices are generated once. Stops early when visit
/// returns false.
void for_each_successor(const Position& p, MoveRule rule,
                        const std::function<bool(const Position&, int)>& visit);

/// Exhaustive, memoized evaluator of every variant over flat path multisets.
/// Thread-safe: concurrent queries share the memo tables.
class Oracle {
 public:
  explicit Oracle(OracleConfig config = default_oracle_config());

  const OracleConfig& config() const noexcept { return config_; }

  Outcome outcome(const Position& p, Variant v);
  Outcome outcome(const Position& p, Variant v, int bound);

  /// Remoteness of the conjunctive (short rule) compound tree.
  int remoteness(const Position& p, Play play);
  /// Suspense number of the continued conjunctive (long rule) compound tree.
  int suspense(const Position& p, Play play);

  /// Whether the move ends the game in the mover's favour or reaches a P-position.
  bool is_winning_move(const Position& p, const CompoundMove& m, Variant v);

  /// All winning vertex-level moves. Throws NotWinnable on P-positions.
  std::vector<CompoundMove> best_moves(const Position& p, Variant v);

  void clear();
  std::size_t memo_size() const;

 private:
  void check_bound(const Position& p, int bound) const;
  Outcome outcome_rec(const Position& p, Variant v);
  int remoteness_rec(const Position& p, Play play);
  int suspense_rec(const Position& p, Play play);

  OracleConfig config_;
  mutable std::shared_mutex mutex_;
  std::array<std::unordered_map<Position, Outcome>, 12> outcomes_;
  std::array<std::unordered_map<Position, int>, 2> remoteness_;
  std::array<std::unordered_map<Position, int>, 2> suspense_;
};

/// Process-wide oracle with the default configuration.
Oracle& shared_oracle();

}  // namespace kayles
