#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fairaudit/coverage.hpp"
#include "fairaudit/search.hpp"

namespace fairaudit {

// Per-class utility box a_k <= U_k <= b_k, supplied by a domain expert.
struct UtilityBounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t classes() const { return lower.size(); }
  void validate(std::size_t num_classes) const;

  bool operator==(const UtilityBounds&) const = default;
};

// Tolerance for margin-vs-gamma comparisons; counts stay integral.
inline constexpr double kMarginEpsilon = 1e-9;

inline bool utility_unfair(double worst_margin, double gamma) {
  return worst_margin <= -gamma + kMarginEpsilon;
}

struct UtilityFinding {
  Selector selector;
  std::vector<double> utilities;  // witness U_1..U_K
  CoverageCounts coverage;
  double realized = 0;  // sum_k c_k U_k under the witness
  double expected = 0;  // (N_x / K) sum_k U_k
  double margin = 0;    // expected - realized, >= gamma at emission
  // Class with the most negative weighted shortfall contribution; used to
  // attribute the finding in enumeration histograms.
  std::size_t attributed_class = 0;

  bool operator==(const UtilityFinding&) const = default;
};

// Expected total utility of n_x instances thrown uniformly at random
// across the classes: (n_x / K) * sum_k U_k.
double expected_random_utility(long long n_x, const std::vector<double>& utilities);

struct MarginResult {
  double worst_margin = 0;       // min over the box of realized - expected
  std::vector<double> witness;   // the minimizing utilities
};

// The objective sum_k (c_k - N_x/K) U_k is linear and separable in U, so
// the box minimum sits at a corner: U_k = b_k where the coefficient is
// negative, a_k otherwise. This decides the existential question exactly.
MarginResult utility_margin(const CoverageCounts& cc, const UtilityBounds& bounds);

std::size_t utility_attributed_class(const CoverageCounts& cc,
                                     const std::vector<double>& witness);

// Minimum-cardinality selector whose worst margin reaches -gamma, with the
// witness utilities; absent certifies utility-weighted fairness at
// (bounds, gamma, max_size).
std::optional<UtilityFinding> utility_search(const Dataset& d,
                                             const UtilityBounds& bounds,
                                             double gamma,
                                             const SearchOptions& opt = {});

}  // namespace fairaudit
