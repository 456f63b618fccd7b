#include "qembed/tabular/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "qembed/error.hpp"

namespace qembed::tabular {

void StandardScaler::fit(const FeatureMatrix& x) {
  if (x.rows() == 0) throw ShapeError("StandardScaler::fit: empty matrix");
  const std::size_t m = x.cols();
  mean_.assign(m, 0.0);
  scale_.assign(m, 0.0);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < m; ++c) mean_[c] += x(r, c);
  for (auto& v : mean_) v /= static_cast<double>(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < m; ++c) scale_[c] += (x(r, c) - mean_[c]) * (x(r, c) - mean_[c]);
  for (auto& s : scale_) {
    s = std::sqrt(s / static_cast<double>(x.rows()));
    if (!(s > 1e-12)) s = 1.0;
  }
}

FeatureMatrix StandardScaler::transform(const FeatureMatrix& x) const {
  if (x.cols() != mean_.size()) throw ShapeError("StandardScaler::transform: column count differs from fit");
  FeatureMatrix out = x;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(r, c) = (x(r, c) - mean_[c]) / scale_[c];
  return out;
}

void MinMaxScaler::fit(const FeatureMatrix& x) {
  if (x.rows() == 0) throw ShapeError("MinMaxScaler::fit: empty matrix");
  min_.assign(x.cols(), 0.0);
  max_.assign(x.cols(), 0.0);
  for (std::size_t c = 0; c < x.cols(); ++c) {
    min_[c] = max_[c] = x(0, c);
    for (std::size_t r = 1; r < x.rows(); ++r) {
      min_[c] = std::min(min_[c], x(r, c));
      max_[c] = std::max(max_[c], x(r, c));
    }
  }
}

FeatureMatrix MinMaxScaler::transform(const FeatureMatrix& x) const {
  if (x.cols() != min_.size()) throw ShapeError("MinMaxScaler::transform: column count differs from fit");
  FeatureMatrix out = x;
  for (std::size_t c = 0; c < x.cols(); ++c) {
    const double range = max_[c] - min_[c];
    for (std::size_t r = 0; r < x.rows(); ++r) {
      double v = range > 0.0 ? (x(r, c) - min_[c]) / range : 0.0;
      if (clip_) v = std::clamp(v, 0.0, 1.0);
      out(r, c) = v;
    }
  }
  return out;
}

}  // namespace qembed::tabular
