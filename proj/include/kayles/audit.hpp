#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "kayles/oracle.hpp"
#include "kayles/position.hpp"
#include "kayles/variant.hpp"

namespace kayles {

/// Calls visit on every multiset of positive parts with sum <= max_total,
/// ordered by total, then descending-lexicographically.
void for_each_position(int max_total, const std::function<void(const Position&)>& visit);
std::vector<Position> enumerate_positions(int max_total);

struct Discrepancy {
  Position position;
  std::string kind;  // "outcome" or "best-move"
  std::string solver;
  std::string oracle;
};

struct DiscrepancyReport {
  Variant variant;
  int max_total = 0;
  std::size_t positions_checked = 0;
  std::vector<Discrepancy> entries;
  double wall_seconds = 0.0;

  bool clean() const { return entries.empty(); }
};

/// Compares the variant's solver with the oracle on every position of total
/// <= max_total, and checks the solver's winning move on every N-position.
/// Throws Unsupported for disjunctive misere.
DiscrepancyReport audit_variant(Variant v, int max_total, Oracle& oracle);

/// CSV rows "position,kind,solver,oracle" followed by a summary block.
void write_report(std::ostream& out, const DiscrepancyReport& report);

/// {n <= limit : P_n is a P-position under v}. Throws Unsupported for
/// disjunctive misere.
std::vector<PathLen> losing_paths(Variant v, PathLen limit);

}  // namespace kayles
