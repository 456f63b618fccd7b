#pragma once

#include <vector>

#include "qembed/learners/model.hpp"

namespace qembed::learners {

struct LogRegOptions {
  double l2 = 1.0;             // penalty (l2/2)|w|^2; the bias is not penalized
  std::size_t max_iter = 100;  // Newton steps
  double tolerance = 1e-6;     // on the max-norm of the gradient
};

// Binary logistic regression fitted by damped Newton iterations on
//   sum_i log(1 + exp(-s_i (w.x_i + b))) + (l2/2)|w|^2,  s_i = +-1.
class LogisticRegression final : public TrainedModel {
 public:
  LogisticRegression(std::vector<double> weights, double bias);

  static LogisticRegression fit(const FeatureMatrix& x, const Labels& y, const LogRegOptions& options = {});

  std::vector<double> predict_score(const FeatureMatrix& x) const override;

  const std::vector<double>& weights() const noexcept { return weights_; }
  double bias() const noexcept { return bias_; }
  std::size_t iterations() const noexcept { return iterations_; }

  // Objective and its gradient (weights then bias) at the given parameters.
  static double loss(const FeatureMatrix& x, const Labels& y, const std::vector<double>& w, double b, double l2);
  static std::vector<double> gradient(const FeatureMatrix& x, const Labels& y, const std::vector<double>& w,
                                      double b, double l2);

 private:
  std::vector<double> weights_;
  double bias_;
  std::size_t iterations_ = 0;
};

}  // namespace qembed::learners
