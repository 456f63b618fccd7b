#pragma once

#include <vector>

#include "qembed/feature_matrix.hpp"

namespace qembed::tabular {

inline constexpr double kVifCap = 1e6;

struct CorrelationResult {
  FeatureMatrix matrix;               // symmetric, unit diagonal
  std::vector<bool> zero_variance;    // per column; its off-diagonal entries are 0
};

CorrelationResult pearson_corr(const FeatureMatrix& x);

struct VifResult {
  std::vector<double> scores;       // capped at kVifCap
  std::vector<bool> degenerate;     // constant column
};

// VIF_j = 1 / (1 - R^2_j), R^2_j from least squares of column j on the
// others plus an intercept.
VifResult vif_scores(const FeatureMatrix& x);

}  // namespace qembed::tabular
