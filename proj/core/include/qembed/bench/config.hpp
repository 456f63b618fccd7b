#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qembed/encoders/encoder.hpp"
#include "qembed/learners/model.hpp"
#include "qembed/tabular/churn_csv.hpp"
#include "qembed/tabular/sampling.hpp"

namespace qembed::bench {

struct EncodingSpec {
  std::string label;
  encoders::EncoderConfig config;
};

// One grid definition. Read from a flat key = value file with [section]
// lists; see configs/full_grid.conf for the full format.
struct ExperimentConfig {
  std::filesystem::path data_path;
  std::filesystem::path output_dir = "results";
  std::vector<std::string> drop_columns;         // defaults to the standard drop list
  std::vector<std::string> categorical_columns;  // empty = Telco categoricals minus drops
  tabular::BlankPolicy blank_policy = tabular::BlankPolicy::DropRows;
  std::vector<EncodingSpec> encodings;
  std::vector<learners::ModelSpec> models;
  std::vector<std::string> unsupported_models;   // named in the grid but not implemented
  std::vector<std::size_t> pca_dims;
  tabular::SplitSpec split;                      // seed is taken per run from seeds
  std::vector<std::uint64_t> seeds;
  std::size_t workers = 1;
  bool record_timings = true;

  // Grid axes non-empty, dims positive, encoders valid. Throws ConfigError.
  void validate() const;
  std::size_t cell_count() const;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Names accepted in [models] that are recognised but not implemented.
bool is_unsupported_model(std::string_view name);

}  // namespace qembed::bench
