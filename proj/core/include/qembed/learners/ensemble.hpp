#pragma once

#include <cstdint>
#include <vector>

#include "qembed/learners/tree.hpp"

namespace qembed::learners {

struct ForestOptions {
  std::size_t n_trees = 100;
  std::size_t max_depth = 12;
  std::size_t min_samples_leaf = 2;
  std::size_t max_features = 0;  // 0 = floor(sqrt(width))
  bool bootstrap = true;
  std::uint64_t seed = 0;
};

// Bagged trees with per-split feature subsampling; score = mean tree score.
class RandomForest final : public TrainedModel {
 public:
  static RandomForest fit(const FeatureMatrix& x, const Labels& y, const ForestOptions& options = {});

  std::vector<double> predict_score(const FeatureMatrix& x) const override;
  const std::vector<DecisionTree>& trees() const noexcept { return trees_; }

 private:
  explicit RandomForest(std::size_t width) : TrainedModel(width) {}
  std::vector<DecisionTree> trees_;
};

struct AdaBoostOptions {
  std::size_t n_estimators = 100;
  std::size_t max_depth = 1;  // weak learner depth; 1 = decision stumps
};

// Discrete AdaBoost. Each round fits a weighted tree, weights it by
// 0.5 ln((1 - err) / err) and reweights rows multiplicatively. Stops early
// when the weak learner is no better than chance (err >= 0.5) or perfect.
// Score = (sum alpha_t h_t / sum alpha_t + 1) / 2 with h_t in {-1, +1}.
class AdaBoost final : public TrainedModel {
 public:
  static AdaBoost fit(const FeatureMatrix& x, const Labels& y, const AdaBoostOptions& options = {});

  std::vector<double> predict_score(const FeatureMatrix& x) const override;
  const std::vector<DecisionTree>& learners() const noexcept { return learners_; }
  const std::vector<double>& learner_weights() const noexcept { return alphas_; }

 private:
  explicit AdaBoost(std::size_t width) : TrainedModel(width) {}
  std::vector<DecisionTree> learners_;
  std::vector<double> alphas_;
};

}  // namespace qembed::learners
