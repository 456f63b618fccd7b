#pragma once

#include <vector>

#include "qembed/feature_matrix.hpp"

namespace qembed::tabular {

// z-score per column with population standard deviation; constant columns
// are centered only.
class StandardScaler {
 public:
  void fit(const FeatureMatrix& x);
  FeatureMatrix transform(const FeatureMatrix& x) const;

  const std::vector<double>& mean() const noexcept { return mean_; }
  const std::vector<double>& scale() const noexcept { return scale_; }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

// Per-column map of the fitted [min, max] onto [0, 1]. With clip set,
// transformed values outside the fitted range are clamped into [0, 1].
class MinMaxScaler {
 public:
  explicit MinMaxScaler(bool clip = true) : clip_(clip) {}

  void fit(const FeatureMatrix& x);
  FeatureMatrix transform(const FeatureMatrix& x) const;

  const std::vector<double>& min() const noexcept { return min_; }
  const std::vector<double>& max() const noexcept { return max_; }

 private:
  bool clip_;
  std::vector<double> min_;
  std::vector<double> max_;
};

}  // namespace qembed::tabular
