#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fairaudit/audit_count.hpp"
#include "fairaudit/audit_pairwise.hpp"
#include "fairaudit/audit_utility.hpp"
#include "fairaudit/search.hpp"

namespace fairaudit {

enum class AuditMode { count, utility, pairwise };

// fair means the enumeration reached a search that returned absent, i.e.
// no unfairness remains beyond the recorded findings; unfair means the
// iteration budget ran out while findings were still turning up.
enum class Verdict { fair, unfair };

struct AuditConfig {
  std::optional<CountThresholds> thresholds;  // count mode
  UtilityBounds bounds;                       // utility / pairwise modes
  double gamma = 0;
  bool gamma_auto = false;                    // gamma came from auto_gamma
  std::size_t max_selector_size = 0;          // 0 = all m PSVs
  std::size_t max_pair_size = 0;              // 0 = all m PSVs
  ExclusionMode exclusion_mode = ExclusionMode::disjoint;
  bool forbid_same_attribute = false;
  bool maximize_pair_cardinality = false;

  bool operator==(const AuditConfig&) const = default;
};

// One witness of unfairness, flattened across the three modes.
struct ReportFinding {
  Selector selector;                           // the group (pairwise: under / x)
  std::optional<Selector> over;                // pairwise only
  std::optional<std::size_t> target_class;     // count target / utility attribution
  std::vector<double> utilities;               // witness; empty in count mode
  CoverageCounts coverage;                     // selector's counts
  std::optional<CoverageCounts> over_coverage; // pairwise only
  std::optional<Rat> target_fraction;          // count mode exact rates
  std::optional<Rat> other_fraction;
  double margin = 0;  // count: rate disparity; utility: expected - realized; pairwise: gap
  std::vector<std::string> covered_ids;        // only when the dataset carries ids

  bool operator==(const ReportFinding&) const = default;
};

struct AuditReport {
  AuditMode mode = AuditMode::count;
  AuditConfig config;
  Verdict verdict = Verdict::fair;
  bool exhausted = false;      // the final search returned absent
  std::size_t iterations = 0;  // searches run
  std::vector<std::string> psv_names;
  std::vector<std::string> class_labels;
  std::vector<std::size_t> histogram;  // findings per target class
  std::vector<ReportFinding> findings;

  bool operator==(const AuditReport&) const = default;
};

// The iterative audit: search, record the finding, add its selector(s) as
// an exclusion, repeat until a search returns absent or `limit` searches
// have run. Findings are pairwise disjoint in the default exclusion mode,
// so at most m iterations can produce one.
AuditReport enumerate_findings(const Dataset& d, AuditMode mode,
                               const AuditConfig& config, std::size_t limit);

// Heuristic disparity gap: 0.8 times the median population probability of
// the PSV combinations up to `combination_order` (the median of an even
// count is the mean of the two middle values).
Rat auto_gamma(const Dataset& d, std::size_t combination_order = 1);

}  // namespace fairaudit
