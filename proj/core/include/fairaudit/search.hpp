#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fairaudit/coverage.hpp"

namespace fairaudit {

// How previously found selectors constrain a new search. `disjoint` is the
// orthogonality reading (empty bitwise intersection with every exclusion);
// `not_equal` merely forbids exact repeats.
enum class ExclusionMode { disjoint, not_equal };

struct SearchOptions {
  // Cardinality cap; 0 means all m PSVs. For the pairwise search this caps
  // the combined cardinality of both selectors.
  std::size_t max_size = 0;
  std::vector<Selector> exclusions;
  ExclusionMode exclusion_mode = ExclusionMode::disjoint;
  // Pairwise, not_equal mode only: unordered pairs that may not repeat.
  std::vector<std::pair<Selector, Selector>> excluded_pairs;
  // Reject selectors mixing two one-hot PSVs of the same raw attribute.
  bool forbid_same_attribute = false;
  // Pairwise only: prefer the largest combined cardinality instead of the
  // smallest.
  bool maximize_pair_cardinality = false;
};

}  // namespace fairaudit
