#pragma once

#include <cstddef>
#include <vector>

#include "qembed/feature_matrix.hpp"

namespace qembed::tabular {

struct PcaModel {
  std::vector<double> mean;
  FeatureMatrix components;                     // n_components x cols, orthonormal rows
  std::vector<double> explained_variance;       // eigenvalues of kept components
  std::vector<double> explained_variance_ratio; // kept components
  std::vector<double> full_spectrum_ratio;      // every component, descending

  std::size_t n_components() const noexcept { return components.rows(); }
};

// Eigendecomposition of the sample covariance. Components are sorted by
// descending eigenvalue; each is sign-normalized so its largest-magnitude
// entry is positive.
PcaModel pca_fit(const FeatureMatrix& x, std::size_t n_components);
FeatureMatrix pca_transform(const PcaModel& model, const FeatureMatrix& x);
FeatureMatrix pca_inverse_transform(const PcaModel& model, const FeatureMatrix& scores);

// Keeps only the first n components of a fitted model.
PcaModel pca_truncate(const PcaModel& model, std::size_t n_components);

// Cumulative sums of the ratios.
std::vector<double> cumulative(const std::vector<double>& ratios);

// Index of the point on the cumulative-variance curve farthest from the
// chord joining its endpoints. Ties (within 1e-12) go to the smaller index.
std::size_t elbow_index(const std::vector<double>& ratios);

}  // namespace qembed::tabular
