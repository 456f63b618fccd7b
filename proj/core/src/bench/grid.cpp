#include "qembed/bench/grid.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "qembed/bench/pipeline.hpp"
#include "qembed/error.hpp"

namespace qembed::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// One featurization shared by every model: (encoding, pca_dim, seed).
struct Group {
  std::size_t encoding;
  std::size_t dim;
  std::size_t seed;
};

}  // namespace

GridResult run_grid(const ExperimentConfig& cfg) {
  cfg.validate();
  tabular::LoadReport load;
  const auto raw = tabular::load_churn_csv(cfg.data_path, {cfg.blank_policy}, &load);
  auto result = run_grid(cfg, raw);
  result.rows_loaded = load.rows_read;
  return result;
}

GridResult run_grid(const ExperimentConfig& cfg, const tabular::LabeledDataset& raw) {
  cfg.validate();
  const auto prepared = prepare_dataset(raw, cfg);
  const std::size_t width = prepared.encoded.column_count();
  for (auto d : cfg.pca_dims)
    if (d > width)
      throw ConfigError("pca dimension " + std::to_string(d) + " exceeds the " + std::to_string(width) +
                        " preprocessed columns");

  GridResult result;
  result.rows_loaded = raw.row_count();
  result.feature_columns = width;
  result.unsupported_models = cfg.unsupported_models;

  std::vector<SeedData> seeds;
  seeds.reserve(cfg.seeds.size());
  for (auto s : cfg.seeds) seeds.push_back(prepare_seed(prepared.encoded, cfg.split, s));
  result.rows_balanced = seeds.front().split.train.row_count() + seeds.front().split.test.row_count();
  result.variance_ratios = seeds.front().pca.full_spectrum_ratio;
  try {
    result.elbow = tabular::elbow_index(result.variance_ratios);
  } catch (const DegenerateCurveError&) {
    result.elbow = 0;
  }

  const std::size_t n_models = cfg.models.size();
  const std::size_t n_dims = cfg.pca_dims.size();
  const std::size_t n_seeds = cfg.seeds.size();
  result.records.resize(cfg.cell_count());
  auto position = [&](std::size_t e, std::size_t m, std::size_t d, std::size_t s) {
    return ((e * n_models + m) * n_dims + d) * n_seeds + s;
  };

  std::vector<Group> groups;
  for (std::size_t e = 0; e < cfg.encodings.size(); ++e)
    for (std::size_t d = 0; d < n_dims; ++d)
      for (std::size_t s = 0; s < n_seeds; ++s) groups.push_back({e, d, s});

  auto run_group = [&](const Group& g) {
    const auto& enc = cfg.encodings[g.encoding];
    const auto& seed_data = seeds[g.seed];
    for (std::size_t m = 0; m < n_models; ++m) {
      auto& rec = result.records[position(g.encoding, m, g.dim, g.seed)];
      rec.encoding = enc.label;
      rec.model = cfg.models[m].name();
      rec.pca_dim = cfg.pca_dims[g.dim];
      rec.seed = cfg.seeds[g.seed];
    }
    CellFeatures features;
    try {
      features = featurize(seed_data, cfg.pca_dims[g.dim], enc.config);
    } catch (const std::exception& e) {
      for (std::size_t m = 0; m < n_models; ++m)
        result.records[position(g.encoding, m, g.dim, g.seed)].error = std::string("encode: ") + e.what();
      return;
    }
    const auto& y_train = seed_data.split.train.labels();
    const auto& y_test = seed_data.split.test.labels();
    for (std::size_t m = 0; m < n_models; ++m) {
      auto& rec = result.records[position(g.encoding, m, g.dim, g.seed)];
      rec.encode_ms = features.encode_ms;
      try {
        const auto spec = cfg.models[m].with_seed(cfg.seeds[g.seed]);
        auto start = Clock::now();
        const auto model = learners::fit(spec, features.train, y_train);
        rec.train_ms = ms_since(start);
        start = Clock::now();
        const auto scores = model->predict_score(features.test);
        Labels predicted(scores.size());
        for (std::size_t i = 0; i < scores.size(); ++i) predicted[i] = scores[i] >= 0.5 ? 1 : 0;
        rec.predict_ms = ms_since(start);
        rec.metrics = learners::metrics(y_test, predicted, scores);
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
      if (!cfg.record_timings) rec.encode_ms = rec.train_ms = rec.predict_ms = 0.0;
    }
  };

  const std::size_t workers = std::min(cfg.workers, groups.size());
  if (workers <= 1) {
    for (const auto& g : groups) run_group(g);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < groups.size(); i = next++) run_group(groups[i]);
      });
    for (auto& t : pool) t.join();
  }
  return result;
}

}  // namespace qembed::bench
