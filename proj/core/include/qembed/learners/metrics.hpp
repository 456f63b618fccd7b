#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qembed::learners {

struct MetricBundle {
  double accuracy = 0.0;
  double precision = 0.0;
  double sensitivity = 0.0;
  double f1 = 0.0;
  double roc_auc = 0.0;
  double cohen_kappa = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  // Names of metrics whose denominator was zero; those are reported as 0.
  std::vector<std::string> undefined;

  bool is_undefined(const std::string& metric) const;
};

// Labels are 0/1. Scores rank class-1 confidence; ROC AUC uses the
// Mann-Whitney rank statistic with ties counted one half.
MetricBundle metrics(std::span<const int> y_true, std::span<const int> y_pred, std::span<const double> scores);

double roc_auc(std::span<const int> y_true, std::span<const double> scores, bool* undefined = nullptr);
double cohen_kappa(std::span<const int> y_true, std::span<const int> y_pred, bool* undefined = nullptr);

}  // namespace qembed::learners
