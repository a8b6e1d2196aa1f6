#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fairaudit/dataset.hpp"

namespace fairaudit {

// Target marginals for a synthetic population. PSV names of the form
// "attr=value" form one-hot groups: within a group a single categorical
// draw decides which value (if any) an instance gets, so no instance ever
// carries two values of one attribute. Plain names are independent
// Bernoulli PSVs.
//
// PSVs are sampled independently of each other; the marginals carry no
// joint structure, so audited combinations in synthetic data reflect
// independence, not any real-world correlation.
struct MarginalSpec {
  std::vector<std::size_t> class_sizes;          // K entries
  std::vector<std::string> psv_names;            // m entries
  std::vector<std::vector<double>> fractions;    // K x m, in [0, 1]
  std::vector<double> utilities;                 // optional, K entries

  void validate() const;
};

// Key-value text format, one "key: values" line each for class_sizes and
// psv_names, one fractions line per class in order, optional utilities.
MarginalSpec load_marginal_spec(const std::string& path);

Dataset synth_population(const MarginalSpec& spec, std::uint64_t seed);

// Uniform random bits and labels, redrawn until no class is empty; drives
// the oracle-equivalence tests. m <= 16.
Dataset random_fixture(std::size_t m, std::size_t n, std::size_t K,
                       std::uint64_t seed);

}  // namespace fairaudit
