#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qembed/learners/model.hpp"

namespace qembed::learners {

struct TreeOptions {
  std::size_t max_depth = 12;        // 0 = unlimited
  std::size_t min_samples_leaf = 2;
  std::size_t max_features = 0;      // per split; 0 or >= width = all features
  std::uint64_t seed = 0;            // feature subsampling
};

// CART classifier grown by weighted Gini impurity. Splits are x <= threshold
// (midpoints between distinct values); gain ties keep the lowest feature and
// then the lowest threshold.
class DecisionTree final : public TrainedModel {
 public:
  struct Node {
    int feature = -1;  // -1 for leaves
    double threshold = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;
    double value = 0.0;  // weighted class-1 fraction
  };

  static DecisionTree fit(const FeatureMatrix& x, const Labels& y, const TreeOptions& options = {},
                          std::span<const double> weights = {});

  std::vector<double> predict_score(const FeatureMatrix& x) const override;
  double score_row(std::span<const double> row) const;

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t depth() const;

 private:
  explicit DecisionTree(std::size_t width) : TrainedModel(width) {}

  std::vector<Node> nodes_;
};

}  // namespace qembed::learners
