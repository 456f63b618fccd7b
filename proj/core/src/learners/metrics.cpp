#include "qembed/learners/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "qembed/error.hpp"

namespace qembed::learners {

bool MetricBundle::is_undefined(const std::string& metric) const {
  return std::find(undefined.begin(), undefined.end(), metric) != undefined.end();
}

double roc_auc(std::span<const int> y_true, std::span<const double> scores, bool* undefined) {
  if (y_true.size() != scores.size()) throw ShapeError("roc_auc: labels and scores differ in length");
  const std::size_t n = y_true.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of midranks of the positives (1-based ranks, ties averaged).
  double positive_rank_sum = 0.0;
  std::size_t n_pos = 0;
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && scores[order[end]] == scores[order[start]]) ++end;
    const double midrank = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t k = start; k < end; ++k)
      if (y_true[order[k]] == 1) {
        positive_rank_sum += midrank;
        ++n_pos;
      }
    start = end;
  }
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    if (undefined) *undefined = true;
    return 0.0;
  }
  if (undefined) *undefined = false;
  const double np = static_cast<double>(n_pos);
  return (positive_rank_sum - np * (np + 1.0) / 2.0) / (np * static_cast<double>(n_neg));
}

double cohen_kappa(std::span<const int> y_true, std::span<const int> y_pred, bool* undefined) {
  if (y_true.size() != y_pred.size() || y_true.empty())
    throw ShapeError("cohen_kappa: inputs must have equal non-zero length");
  const double n = static_cast<double>(y_true.size());
  double agree = 0.0;
  double true_pos = 0.0;
  double pred_pos = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    agree += y_true[i] == y_pred[i] ? 1.0 : 0.0;
    true_pos += y_true[i] == 1 ? 1.0 : 0.0;
    pred_pos += y_pred[i] == 1 ? 1.0 : 0.0;
  }
  const double p_o = agree / n;
  const double p_e = (true_pos * pred_pos + (n - true_pos) * (n - pred_pos)) / (n * n);
  if (1.0 - p_e <= 0.0) {
    if (undefined) *undefined = true;
    return 0.0;
  }
  if (undefined) *undefined = false;
  return (p_o - p_e) / (1.0 - p_e);
}

MetricBundle metrics(std::span<const int> y_true, std::span<const int> y_pred, std::span<const double> scores) {
  if (y_true.empty()) throw ShapeError("metrics: empty input");
  if (y_true.size() != y_pred.size() || y_true.size() != scores.size())
    throw ShapeError("metrics: labels, predictions and scores must have equal length");
  MetricBundle m;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool t = y_true[i] == 1;
    const bool p = y_pred[i] == 1;
    if (t && p) ++m.tp;
    else if (!t && p) ++m.fp;
    else if (!t && !p) ++m.tn;
    else ++m.fn;
  }
  const double n = static_cast<double>(y_true.size());
  m.accuracy = static_cast<double>(m.tp + m.tn) / n;
  auto ratio = [&](std::size_t num, std::size_t den, const char* name) {
    if (den == 0) {
      m.undefined.emplace_back(name);
      return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
  };
  m.precision = ratio(m.tp, m.tp + m.fp, "precision");
  m.sensitivity = ratio(m.tp, m.tp + m.fn, "sensitivity");
  if (m.precision + m.sensitivity > 0.0) {
    m.f1 = 2.0 * m.precision * m.sensitivity / (m.precision + m.sensitivity);
  } else {
    m.undefined.emplace_back("f1");
  }
  bool undefined = false;
  m.roc_auc = roc_auc(y_true, scores, &undefined);
  if (undefined) m.undefined.emplace_back("roc_auc");
  m.cohen_kappa = cohen_kappa(y_true, y_pred, &undefined);
  if (undefined) m.undefined.emplace_back("cohen_kappa");
  return m;
}

}  // namespace qembed::learners
