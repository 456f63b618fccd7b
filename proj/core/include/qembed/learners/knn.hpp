#pragma once

#include "qembed/learners/model.hpp"

namespace qembed::learners {

// Euclidean k-nearest-neighbour vote. Distance ties go to the lower training
// row. Score = fraction of class-1 neighbours.
class KNearestNeighbors final : public TrainedModel {
 public:
  KNearestNeighbors(FeatureMatrix x, Labels y, std::size_t k);

  std::vector<double> predict_score(const FeatureMatrix& x) const override;
  std::size_t k() const noexcept { return k_; }

 private:
  FeatureMatrix train_;
  Labels labels_;
  std::size_t k_;
};

}  // namespace qembed::learners
