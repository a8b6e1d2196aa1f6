#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairaudit/audit_count.hpp"
#include "fairaudit/audit_pairwise.hpp"
#include "fairaudit/audit_utility.hpp"
#include "fairaudit/dataset.hpp"
#include "fairaudit/search.hpp"

namespace fairaudit {

// Brute-force verifiers. They enumerate every selector (or ordered
// disjoint pair) in cardinality-then-lexicographic order through a code
// path independent of the DFS engines, applying the same feasibility
// predicates, and return the first hit. m <= 16 enforced.
std::optional<CountFinding> brute_force_count(
    const Dataset& d, const CountThresholds& t, const SearchOptions& opt = {},
    std::optional<std::size_t> target = std::nullopt);

std::optional<UtilityFinding> brute_force_utility(const Dataset& d,
                                                  const UtilityBounds& bounds,
                                                  double gamma,
                                                  const SearchOptions& opt = {});

std::optional<PairwiseFinding> brute_force_pairwise(const Dataset& d,
                                                    const UtilityBounds& bounds,
                                                    double gamma,
                                                    const SearchOptions& opt = {});

// A Minimum Set Cover instance: does some subcollection of at most r
// subsets cover the universe 1..n?
struct MscInstance {
  std::size_t universe_size = 0;                   // n
  std::vector<std::vector<std::size_t>> subsets;   // 1-based elements
  std::size_t cover_bound = 0;                     // r, with r < n

  void validate() const;
};

// Plain-text format: first line "n m r", then m lines of space-separated
// element indices (a blank line is an empty subset).
MscInstance load_msc(const std::string& path);

struct MscReduction {
  Dataset dataset;
  std::size_t target = 0;
  CountThresholds thresholds;  // absolute counts: alpha = r, beta = n
};

// The hardness reduction, used here as a correctness harness: the target
// class holds one instance per subset (PSV j set on instance j alone) and
// the other class holds one instance per universe element, whose PSVs mark
// the subsets containing it. A UDSC solution is then exactly a cover of
// size at most r.
MscReduction reduce_msc_to_udsc(const MscInstance& inst);

// 1-based subset indices of the finding's PSVs; throws if they do not
// actually cover the universe within the bound (that would be a solver
// bug, not a data error).
std::vector<std::size_t> extract_cover(const CountFinding& finding,
                                       const MscInstance& inst);

// Reference answer for the reduction tests: exhaustive cover existence.
bool msc_cover_exists(const MscInstance& inst);

struct MonteCarloStats {
  double mean = 0;
  double std_error = 0;
};

// Simulates throwing n_x instances uniformly at the classes and summing
// class utilities. Deterministic: trials run in fixed-size chunks whose
// mt19937_64 generators are seeded from splitmix64(seed, chunk), so the
// moments do not depend on scheduling. trials >= 1000 required.
MonteCarloStats monte_carlo_expected_utility(long long n_x,
                                             const std::vector<double>& utilities,
                                             std::size_t trials,
                                             std::uint64_t seed);

}  // namespace fairaudit
