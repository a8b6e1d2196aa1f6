#pragma once

#include <optional>
#include <vector>

#include "fairaudit/audit_utility.hpp"
#include "fairaudit/coverage.hpp"
#include "fairaudit/search.hpp"

namespace fairaudit {

inline bool pairwise_unfair(double best_gap, double gamma) {
  return best_gap >= gamma - kMarginEpsilon;
}

struct PairwiseFinding {
  Selector under;  // x, the short-changed group
  Selector over;   // w, bitwise disjoint from x
  std::vector<double> utilities;
  CoverageCounts under_coverage;
  CoverageCounts over_coverage;
  double gap = 0;  // sum_k U_k (c_k(w) - c_k(x)), >= gamma at emission

  bool operator==(const PairwiseFinding&) const = default;
};

struct GapResult {
  double best_gap = 0;          // max over the box of w's total utility minus x's
  std::vector<double> witness;  // the maximizing utilities
};

// Mirror of utility_margin: maximize sum_k (c_k(w) - c_k(x)) U_k over the
// box, corner by corner.
GapResult pairwise_margin(const CoverageCounts& cx, const CoverageCounts& cw,
                          const UtilityBounds& bounds);

// Searches disjoint pairs (x, w) with ||x|| + ||w|| <= max_size for a gap
// of at least gamma, preferring the smallest combined cardinality (or the
// largest, with maximize_pair_cardinality) and then the lexicographically
// smallest (x, w). The emitted labelling is canonical: w is the
// over-utilized side.
std::optional<PairwiseFinding> pairwise_search(const Dataset& d,
                                               const UtilityBounds& bounds,
                                               double gamma,
                                               const SearchOptions& opt = {});

}  // namespace fairaudit
