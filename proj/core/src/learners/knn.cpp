#include "qembed/learners/knn.hpp"

#include <algorithm>
#include <utility>

#include "qembed/error.hpp"

namespace qembed::learners {

KNearestNeighbors::KNearestNeighbors(FeatureMatrix x, Labels y, std::size_t k)
    : TrainedModel(x.cols()), train_(std::move(x)), labels_(std::move(y)), k_(k) {
  check_training_data(train_, labels_, /*allow_single_class=*/true);
  if (k_ == 0) throw ConfigError("knn: k must be positive");
}

std::vector<double> KNearestNeighbors::predict_score(const FeatureMatrix& x) const {
  check_width(x);
  const std::size_t k = std::min(k_, train_.rows());
  std::vector<std::pair<double, std::size_t>> dist(train_.rows());
  std::vector<double> out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const auto query = x.row(r);
    for (std::size_t t = 0; t < train_.rows(); ++t) {
      const auto ref = train_.row(t);
      double s = 0.0;
      for (std::size_t c = 0; c < query.size(); ++c) {
        const double diff = query[c] - ref[c];
        s += diff * diff;
      }
      dist[t] = {s, t};
    }
    // Pair ordering breaks distance ties by training index.
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
    std::size_t positives = 0;
    for (std::size_t i = 0; i < k; ++i) positives += labels_[dist[i].second] == 1 ? 1 : 0;
    out[r] = static_cast<double>(positives) / static_cast<double>(k);
  }
  return out;
}

}  // namespace qembed::learners
