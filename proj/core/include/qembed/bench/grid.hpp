#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qembed/bench/config.hpp"
#include "qembed/learners/metrics.hpp"

namespace qembed::bench {

struct ExperimentRecord {
  std::string encoding;
  std::string model;
  std::size_t pca_dim = 0;
  std::uint64_t seed = 0;
  learners::MetricBundle metrics;
  double encode_ms = 0.0;
  double train_ms = 0.0;
  double predict_ms = 0.0;
  std::string error;  // empty when the cell completed

  bool ok() const noexcept { return error.empty(); }
};

struct GridResult {
  std::vector<ExperimentRecord> records;  // grid order: encoding, model, pca_dim, seed
  std::vector<std::string> unsupported_models;
  std::vector<double> variance_ratios;    // full spectrum, first seed's training split
  std::size_t elbow = 0;
  std::size_t rows_loaded = 0;
  std::size_t rows_balanced = 0;
  std::size_t feature_columns = 0;
};

GridResult run_grid(const ExperimentConfig& cfg);
// Same, on an already-loaded raw dataset (data_path is ignored).
GridResult run_grid(const ExperimentConfig& cfg, const tabular::LabeledDataset& raw);

}  // namespace qembed::bench
