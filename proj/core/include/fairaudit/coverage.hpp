#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fairaudit/dataset.hpp"
#include "fairaudit/rational.hpp"

namespace fairaudit {

// A subset of PSVs, read as a disjunction: the group of everyone matching
// at least one selected PSV.
struct Selector {
  BitVec bits;

  std::size_t cardinality() const { return bits.count(); }
  static Selector of(std::size_t m, std::initializer_list<std::size_t> indices);
  std::vector<std::size_t> indices() const;

  bool operator==(const Selector&) const = default;
};

// Orders selectors by their sorted index sequences, so the selector using
// lower PSV indices comes first. Every tie-break in the audits uses this.
bool selector_lex_less(const Selector& a, const Selector& b);

struct CoverageCounts {
  std::vector<long long> per_class;  // covered instances per class
  long long population = 0;          // total covered, N_x

  bool operator==(const CoverageCounts&) const = default;
};

// True iff the instance has at least one selected PSV set.
bool covers(const Selector& x, const BitVec& instance);

CoverageCounts coverage_counts(const Dataset& d, const Selector& x);

// (P(x | C_k), P(x | not C_k)) as exact rationals.
std::pair<Rat, Rat> conditional_probability(const CoverageCounts& cc,
                                            const Dataset& d, std::size_t k);

// P(x) over the whole population.
Rat population_probability(const CoverageCounts& cc, const Dataset& d);

}  // namespace fairaudit
