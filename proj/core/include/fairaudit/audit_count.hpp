#pragma once

#include <cstddef>
#include <optional>

#include "fairaudit/coverage.hpp"
#include "fairaudit/rational.hpp"
#include "fairaudit/search.hpp"

namespace fairaudit {

// Fractional thresholds scale by class size (coverage rates); absolute
// thresholds compare raw covered counts.
enum class ThresholdMode { fractional, absolute };

// Whether the beta constraint applies to every other class separately or
// to the pooled complement of the target class.
enum class ComplementMode { per_class, pooled };

// under_represented looks for a group scarce in the target class and
// plentiful elsewhere; over_represented swaps the roles of the bounds.
enum class Direction { under_represented, over_represented };

struct CountThresholds {
  Rat alpha;
  Rat beta;
  ThresholdMode mode = ThresholdMode::fractional;
  ComplementMode complement = ComplementMode::per_class;
  Direction direction = Direction::under_represented;

  static CountThresholds fractional(Rat alpha, Rat beta,
                                    ComplementMode c = ComplementMode::per_class);
  static CountThresholds absolute(long long alpha, long long beta,
                                  ComplementMode c = ComplementMode::per_class);

  Rat gamma() const { return beta - alpha; }
  void validate() const;

  bool operator==(const CountThresholds&) const = default;
};

struct CountFinding {
  Selector selector;
  std::size_t target = 0;
  CoverageCounts coverage;
  Rat achieved_target_fraction;  // coverage rate inside the target class
  Rat min_other_fraction;        // worst rate among the others (pooled rate in pooled mode)

  bool operator==(const CountFinding&) const = default;
};

// The decision form: x covers at most an alpha share of the target class
// and at least a beta share of every other class (or of the pooled
// complement). All comparisons are exact.
bool udsc_feasible(const Dataset& d, std::size_t target, const Selector& x,
                   const CountThresholds& t);

// Minimum-cardinality feasible selector for one target class, or absent.
// Ties break toward the lexicographically smallest bit pattern.
std::optional<CountFinding> udsc_search(const Dataset& d, std::size_t target,
                                        const CountThresholds& t,
                                        const SearchOptions& opt = {});

// Runs udsc_search with each class as the target; returns the globally
// minimal finding (cardinality, then target index, then selector), or
// absent when the partition is count-fair at these thresholds.
std::optional<CountFinding> audit_count_all(const Dataset& d,
                                            const CountThresholds& t,
                                            const SearchOptions& opt = {});

}  // namespace fairaudit
