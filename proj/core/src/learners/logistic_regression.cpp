#include "qembed/learners/logistic_regression.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qembed/error.hpp"

namespace qembed::learners {

namespace {

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double margin(std::span<const double> row, const std::vector<double>& w, double b) {
  double z = b;
  for (std::size_t c = 0; c < row.size(); ++c) z += w[c] * row[c];
  return z;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace

LogisticRegression::LogisticRegression(std::vector<double> weights, double bias)
    : TrainedModel(weights.size()), weights_(std::move(weights)), bias_(bias) {}

double LogisticRegression::loss(const FeatureMatrix& x, const Labels& y, const std::vector<double>& w, double b,
                                double l2) {
  double total = 0.0;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const double s = y[r] == 1 ? 1.0 : -1.0;
    total += softplus(-s * margin(x.row(r), w, b));
  }
  double norm = 0.0;
  for (double e : w) norm += e * e;
  return total + 0.5 * l2 * norm;
}

std::vector<double> LogisticRegression::gradient(const FeatureMatrix& x, const Labels& y,
                                                 const std::vector<double>& w, double b, double l2) {
  const std::size_t d = x.cols();
  std::vector<double> g(d + 1, 0.0);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const double residual = logistic(margin(x.row(r), w, b)) - static_cast<double>(y[r]);
    const auto row = x.row(r);
    for (std::size_t c = 0; c < d; ++c) g[c] += residual * row[c];
    g[d] += residual;
  }
  for (std::size_t c = 0; c < d; ++c) g[c] += l2 * w[c];
  return g;
}

LogisticRegression LogisticRegression::fit(const FeatureMatrix& x, const Labels& y, const LogRegOptions& options) {
  check_training_data(x, y);
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  const auto p = static_cast<Eigen::Index>(d + 1);

  std::vector<double> w(d, 0.0);
  double b = 0.0;
  double current = loss(x, y, w, b, options.l2);
  std::size_t iter = 0;
  for (; iter < options.max_iter; ++iter) {
    const auto g = gradient(x, y, w, b, options.l2);
    if (max_abs(g) < options.tolerance) break;

    Eigen::MatrixXd hessian = Eigen::MatrixXd::Zero(p, p);
    for (std::size_t r = 0; r < n; ++r) {
      const double prob = logistic(margin(x.row(r), w, b));
      const double weight = prob * (1.0 - prob);
      if (weight == 0.0) continue;
      Eigen::VectorXd row(p);
      for (std::size_t c = 0; c < d; ++c) row(static_cast<Eigen::Index>(c)) = x(r, c);
      row(p - 1) = 1.0;
      hessian.selfadjointView<Eigen::Lower>().rankUpdate(row, weight);
    }
    hessian = hessian.selfadjointView<Eigen::Lower>();
    for (Eigen::Index c = 0; c + 1 < p; ++c) hessian(c, c) += options.l2;
    hessian.diagonal().array() += 1e-10;

    Eigen::VectorXd grad(p);
    for (Eigen::Index c = 0; c < p; ++c) grad(c) = g[static_cast<std::size_t>(c)];
    const Eigen::VectorXd step = hessian.ldlt().solve(grad);
    if (!step.allFinite()) throw TrainingError("logreg: Newton step is not finite");

    // Backtracking keeps the objective monotone on badly scaled data.
    double t = 1.0;
    std::vector<double> w_next(d);
    double b_next = b;
    double next = current;
    for (int halvings = 0; halvings < 50; ++halvings, t *= 0.5) {
      for (std::size_t c = 0; c < d; ++c) w_next[c] = w[c] - t * step(static_cast<Eigen::Index>(c));
      b_next = b - t * step(p - 1);
      next = loss(x, y, w_next, b_next, options.l2);
      if (next <= current) break;
    }
    if (!(next <= current)) break;
    w.swap(w_next);
    b = b_next;
    current = next;
  }
  LogisticRegression model(std::move(w), b);
  model.iterations_ = iter;
  return model;
}

std::vector<double> LogisticRegression::predict_score(const FeatureMatrix& x) const {
  check_width(x);
  std::vector<double> out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) out[r] = logistic(margin(x.row(r), weights_, bias_));
  return out;
}

}  // namespace qembed::learners
