#pragma once

#include <cstdint>
#include <vector>

#include "qembed/tabular/dataset.hpp"

namespace qembed::tabular {

// Keeps every minority row, draws the same number of majority rows without
// replacement, and returns the union in seeded-shuffled order.
LabeledDataset undersample(const LabeledDataset& ds, std::uint64_t seed,
                           std::vector<std::size_t>* kept_rows = nullptr);

struct SplitSpec {
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
  bool stratified = true;

  void validate() const;
};

struct Split {
  LabeledDataset train;
  LabeledDataset test;
  std::vector<std::size_t> train_rows;  // ascending source indices
  std::vector<std::size_t> test_rows;
};

// Train size per stratum is floor(n * fraction); the remainder goes to test.
Split train_test_split(const LabeledDataset& ds, const SplitSpec& spec);

}  // namespace qembed::tabular
