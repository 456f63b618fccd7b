#pragma once

#include <cstdint>
#include <optional>

#include "qembed/bench/config.hpp"
#include "qembed/tabular/dataset.hpp"
#include "qembed/tabular/pca.hpp"
#include "qembed/tabular/preprocess.hpp"
#include "qembed/tabular/scaling.hpp"

namespace qembed::bench {

// Loaded, column-dropped and one-hot encoded data, shared by every seed.
struct PreparedData {
  tabular::LabeledDataset encoded;
  tabular::LoadReport load;
  tabular::OneHotReport one_hot;
};

PreparedData prepare_dataset(const ExperimentConfig& cfg);
PreparedData prepare_dataset(const tabular::LabeledDataset& raw, const ExperimentConfig& cfg);

// Balanced, split and standardized data plus a full-rank PCA fitted on the
// training split.
struct SeedData {
  std::uint64_t seed = 0;
  tabular::Split split;
  tabular::StandardScaler scaler;
  FeatureMatrix train_std;
  FeatureMatrix test_std;
  tabular::PcaModel pca;
};

SeedData prepare_seed(const tabular::LabeledDataset& encoded, const tabular::SplitSpec& split, std::uint64_t seed);

// Every parameter learned from data on the way to the model inputs.
struct FittedTransforms {
  tabular::PcaModel pca;
  std::optional<tabular::MinMaxScaler> input_scaler;
};

struct CellFeatures {
  FeatureMatrix train;
  FeatureMatrix test;
  FittedTransforms transforms;
  double encode_ms = 0.0;
};

// Projects onto the first pca_dim components, applies the encoder's input
// scaling (fitted on train) and encodes both splits.
CellFeatures featurize(const SeedData& seed_data, std::size_t pca_dim, const encoders::EncoderConfig& encoder,
                       std::size_t workers = 1);

}  // namespace qembed::bench
