#include "qembed/bench/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "qembed/error.hpp"

namespace qembed::bench {

PreparedData prepare_dataset(const ExperimentConfig& cfg) {
  if (cfg.data_path.empty()) throw ConfigError("no data path configured");
  tabular::LoadReport load;
  const auto raw = tabular::load_churn_csv(cfg.data_path, {cfg.blank_policy}, &load);
  auto prepared = prepare_dataset(raw, cfg);
  prepared.load = load;
  return prepared;
}

PreparedData prepare_dataset(const tabular::LabeledDataset& raw, const ExperimentConfig& cfg) {
  PreparedData out;
  out.load.rows_read = raw.row_count();
  const auto dropped = raw.drop_columns(cfg.drop_columns);

  std::vector<std::string> categorical = cfg.categorical_columns;
  if (categorical.empty()) {
    for (const auto& c : dropped.columns())
      if (c.categorical()) categorical.push_back(c.name);
  }
  out.encoded = tabular::one_hot(dropped, categorical, &out.one_hot);
  return out;
}

SeedData prepare_seed(const tabular::LabeledDataset& encoded, const tabular::SplitSpec& split, std::uint64_t seed) {
  SeedData out;
  out.seed = seed;
  const auto balanced = tabular::undersample(encoded, seed);
  tabular::SplitSpec spec = split;
  spec.seed = seed;
  out.split = tabular::train_test_split(balanced, spec);

  const auto train = out.split.train.features();
  out.scaler.fit(train);
  out.train_std = out.scaler.transform(train);
  out.test_std = out.scaler.transform(out.split.test.features());
  out.pca = tabular::pca_fit(out.train_std, std::min(out.train_std.rows(), out.train_std.cols()));
  return out;
}

CellFeatures featurize(const SeedData& seed_data, std::size_t pca_dim, const encoders::EncoderConfig& encoder,
                       std::size_t workers) {
  if (pca_dim == 0 || pca_dim > seed_data.pca.n_components())
    throw ConfigError("pca dimension " + std::to_string(pca_dim) + " exceeds the " +
                      std::to_string(seed_data.pca.n_components()) + " available components");
  CellFeatures out;
  out.transforms.pca = tabular::pca_truncate(seed_data.pca, pca_dim);
  auto train = tabular::pca_transform(out.transforms.pca, seed_data.train_std);
  auto test = tabular::pca_transform(out.transforms.pca, seed_data.test_std);
  if (encoder.input_scaling == encoders::InputScaling::MinMaxTrain) {
    tabular::MinMaxScaler scaler;
    scaler.fit(train);
    train = scaler.transform(train);
    test = scaler.transform(test);
    out.transforms.input_scaler = std::move(scaler);
  }
  const auto start = std::chrono::steady_clock::now();
  out.train = encoders::encode_matrix(train, encoder, workers);
  out.test = encoders::encode_matrix(test, encoder, workers);
  out.encode_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace qembed::bench
