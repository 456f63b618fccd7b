#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qembed/learners/model.hpp"

namespace qembed::learners {

enum class KernelType { Linear, Polynomial, Rbf, Sigmoid };

struct Kernel {
  KernelType type = KernelType::Rbf;
  double gamma = 1.0;
  double coef0 = 0.0;
  int degree = 3;

  double operator()(std::span<const double> a, std::span<const double> b) const;
};

struct SvmOptions {
  double c = 1.0;
  double tolerance = 1e-3;   // on the maximal KKT violation m(alpha) - M(alpha)
  std::size_t max_iter = 1'000'000;
};

// C-SVC trained on the kernelized dual by sequential minimal optimization
// with second-order working-set selection. Scores are the logistic link of
// the decision value.
class SupportVectorMachine final : public TrainedModel {
 public:
  static SupportVectorMachine fit(const FeatureMatrix& x, const Labels& y, const Kernel& kernel,
                                  const SvmOptions& options = {});

  // gamma = 1 / (width * variance of all entries); 1 if the variance is zero.
  static double scale_gamma(const FeatureMatrix& x);

  std::vector<double> decision_function(const FeatureMatrix& x) const;
  std::vector<double> predict_score(const FeatureMatrix& x) const override;

  // Dual multipliers for every training row (zero for non-support rows).
  const std::vector<double>& alphas() const noexcept { return alphas_; }
  double c() const noexcept { return c_; }
  double rho() const noexcept { return rho_; }
  double kkt_gap() const noexcept { return kkt_gap_; }
  bool converged() const noexcept { return converged_; }
  std::size_t iterations() const noexcept { return iterations_; }
  std::size_t support_count() const noexcept { return support_.rows(); }

 private:
  SupportVectorMachine(std::size_t width, Kernel kernel) : TrainedModel(width), kernel_(kernel) {}

  Kernel kernel_;
  FeatureMatrix support_;
  std::vector<double> coef_;  // alpha_i * y_i for support rows
  std::vector<double> alphas_;
  double c_ = 1.0;
  double rho_ = 0.0;
  double kkt_gap_ = 0.0;
  bool converged_ = false;
  std::size_t iterations_ = 0;
};

}  // namespace qembed::learners
