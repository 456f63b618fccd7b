#include "qembed/learners/ensemble.hpp"

#include <cmath>
#include <numeric>

#include "qembed/error.hpp"
#include "qembed/random.hpp"

namespace qembed::learners {

RandomForest RandomForest::fit(const FeatureMatrix& x, const Labels& y, const ForestOptions& options) {
  check_training_data(x, y);
  if (options.n_trees == 0) throw ConfigError("random-forest: n_trees must be positive");
  const std::size_t n = x.rows();
  TreeOptions tree_opts;
  tree_opts.max_depth = options.max_depth;
  tree_opts.min_samples_leaf = options.min_samples_leaf;
  tree_opts.max_features = options.max_features != 0
                               ? options.max_features
                               : std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(x.cols()))));

  RandomForest forest(x.cols());
  forest.trees_.reserve(options.n_trees);
  Rng master(options.seed);
  for (std::size_t t = 0; t < options.n_trees; ++t) {
    Rng tree_rng(master.next());
    if (options.bootstrap) {
      std::vector<std::size_t> rows(n);
      for (auto& r : rows) r = tree_rng.index(n);
      Labels yb(n);
      for (std::size_t i = 0; i < n; ++i) yb[i] = y[rows[i]];
      tree_opts.seed = tree_rng.next();
      forest.trees_.push_back(DecisionTree::fit(x.select_rows(rows), yb, tree_opts));
    } else {
      tree_opts.seed = tree_rng.next();
      forest.trees_.push_back(DecisionTree::fit(x, y, tree_opts));
    }
  }
  return forest;
}

std::vector<double> RandomForest::predict_score(const FeatureMatrix& x) const {
  check_width(x);
  std::vector<double> out(x.rows(), 0.0);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    double acc = 0.0;
    for (const auto& tree : trees_) acc += tree.score_row(x.row(r));
    out[r] = acc / static_cast<double>(trees_.size());
  }
  return out;
}

AdaBoost AdaBoost::fit(const FeatureMatrix& x, const Labels& y, const AdaBoostOptions& options) {
  check_training_data(x, y);
  if (options.n_estimators == 0) throw ConfigError("adaboost: n_estimators must be positive");
  constexpr double kMinError = 1e-10;
  const std::size_t n = x.rows();
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  TreeOptions weak;
  weak.max_depth = options.max_depth;
  weak.min_samples_leaf = 1;

  AdaBoost model(x.cols());
  for (std::size_t round = 0; round < options.n_estimators; ++round) {
    auto learner = DecisionTree::fit(x, y, weak, w);
    std::vector<double> h(n);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = learner.score_row(x.row(i)) >= 0.5 ? 1.0 : -1.0;
      const double target = y[i] == 1 ? 1.0 : -1.0;
      if (h[i] != target) err += w[i];
    }
    if (err >= 0.5) break;
    const double clipped = std::max(err, kMinError);
    const double alpha = 0.5 * std::log((1.0 - clipped) / clipped);
    model.learners_.push_back(std::move(learner));
    model.alphas_.push_back(alpha);
    if (err <= kMinError) break;

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double target = y[i] == 1 ? 1.0 : -1.0;
      w[i] *= std::exp(-alpha * target * h[i]);
      total += w[i];
    }
    for (auto& wi : w) wi /= total;
  }
  return model;
}

std::vector<double> AdaBoost::predict_score(const FeatureMatrix& x) const {
  check_width(x);
  std::vector<double> out(x.rows(), 0.5);
  const double total = std::accumulate(alphas_.begin(), alphas_.end(), 0.0);
  if (learners_.empty() || total <= 0.0) return out;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    double acc = 0.0;
    for (std::size_t t = 0; t < learners_.size(); ++t)
      acc += alphas_[t] * (learners_[t].score_row(x.row(r)) >= 0.5 ? 1.0 : -1.0);
    out[r] = 0.5 * (acc / total + 1.0);
  }
  return out;
}

}  // namespace qembed::learners
