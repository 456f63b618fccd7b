#include "qembed/learners/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qembed/error.hpp"

namespace qembed::learners {

double Kernel::operator()(std::span<const double> a, std::span<const double> b) const {
  switch (type) {
    case KernelType::Linear: {
      double dot = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
      return dot;
    }
    case KernelType::Polynomial: {
      double dot = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
      return std::pow(gamma * dot + coef0, degree);
    }
    case KernelType::Rbf: {
      double dist = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        dist += diff * diff;
      }
      return std::exp(-gamma * dist);
    }
    case KernelType::Sigmoid: {
      double dot = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
      return std::tanh(gamma * dot + coef0);
    }
  }
  return 0.0;
}

double SupportVectorMachine::scale_gamma(const FeatureMatrix& x) {
  const auto values = x.values();
  if (values.empty() || x.cols() == 0) return 1.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return var > 0.0 ? 1.0 / (static_cast<double>(x.cols()) * var) : 1.0;
}

namespace {

constexpr double kTau = 1e-12;

// Kernel rows computed on first use and kept for the rest of the solve.
class KernelRows {
 public:
  KernelRows(const FeatureMatrix& x, const Kernel& k) : x_(x), kernel_(k), rows_(x.rows()), diag_(x.rows()) {
    for (std::size_t i = 0; i < x.rows(); ++i) diag_[i] = kernel_(x.row(i), x.row(i));
  }

  const std::vector<double>& row(std::size_t i) {
    auto& r = rows_[i];
    if (r.empty()) {
      r.resize(x_.rows());
      for (std::size_t j = 0; j < x_.rows(); ++j) r[j] = kernel_(x_.row(i), x_.row(j));
    }
    return r;
  }
  double diag(std::size_t i) const { return diag_[i]; }

 private:
  const FeatureMatrix& x_;
  Kernel kernel_;
  std::vector<std::vector<double>> rows_;
  std::vector<double> diag_;
};

}  // namespace

SupportVectorMachine SupportVectorMachine::fit(const FeatureMatrix& x, const Labels& labels, const Kernel& kernel,
                                               const SvmOptions& options) {
  check_training_data(x, labels);
  if (!(options.c > 0.0)) throw ConfigError("svm: C must be positive");
  const std::size_t n = x.rows();
  const double c = options.c;
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = labels[i] == 1 ? 1.0 : -1.0;

  KernelRows k(x, kernel);
  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);  // gradient of 0.5 a'Qa - e'a, Q_ij = y_i y_j K_ij

  auto upper = [&](std::size_t t) { return alpha[t] >= c; };
  auto lower = [&](std::size_t t) { return alpha[t] <= 0.0; };
  // In the up set when alpha can move so that y_t alpha_t increases.
  auto in_up = [&](std::size_t t) { return y[t] > 0 ? !upper(t) : !lower(t); };
  auto in_low = [&](std::size_t t) { return y[t] > 0 ? !lower(t) : !upper(t); };

  SupportVectorMachine model(x.cols(), kernel);
  model.c_ = c;
  std::size_t iter = 0;
  double gap = std::numeric_limits<double>::infinity();
  for (; iter < options.max_iter; ++iter) {
    // Working set: i maximizes -y G over the up set; j minimizes the
    // second-order objective decrease over the low set.
    double gmax = -std::numeric_limits<double>::infinity();
    std::size_t i = n;
    for (std::size_t t = 0; t < n; ++t) {
      if (in_up(t) && -y[t] * grad[t] >= gmax) {
        gmax = -y[t] * grad[t];
        i = t;
      }
    }
    double gmax2 = -std::numeric_limits<double>::infinity();
    std::size_t j = n;
    double best_obj = std::numeric_limits<double>::infinity();
    const std::vector<double>* ki = i < n ? &k.row(i) : nullptr;
    for (std::size_t t = 0; t < n; ++t) {
      if (!in_low(t)) continue;
      const double yg = y[t] * grad[t];
      gmax2 = std::max(gmax2, yg);
      const double grad_diff = gmax + yg;
      if (ki && grad_diff > 0.0) {
        double quad = k.diag(i) + k.diag(t) - 2.0 * (*ki)[t];
        if (quad <= 0.0) quad = kTau;
        const double obj = -(grad_diff * grad_diff) / quad;
        if (obj <= best_obj) {
          best_obj = obj;
          j = t;
        }
      }
    }
    gap = gmax + gmax2;
    if (gap < options.tolerance || j == n || i == n) break;

    const auto& qi = k.row(i);
    const auto& qj = k.row(j);
    const double old_ai = alpha[i];
    const double old_aj = alpha[j];
    double ai = old_ai;
    double aj = old_aj;
    const double kij = qi[j];
    if (y[i] != y[j]) {
      // Q_ij = -K_ij when the labels differ.
      double quad = k.diag(i) + k.diag(j) - 2.0 * kij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = ai - aj;
      ai += delta;
      aj += delta;
      if (diff > 0.0) {
        if (aj < 0.0) {
          aj = 0.0;
          ai = diff;
        }
      } else if (ai < 0.0) {
        ai = 0.0;
        aj = -diff;
      }
      if (diff > 0.0) {
        if (ai > c) {
          ai = c;
          aj = c - diff;
        }
      } else if (aj > c) {
        aj = c;
        ai = c + diff;
      }
    } else {
      double quad = k.diag(i) + k.diag(j) - 2.0 * kij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = ai + aj;
      ai -= delta;
      aj += delta;
      if (sum > c) {
        if (ai > c) {
          ai = c;
          aj = sum - c;
        }
      } else if (aj < 0.0) {
        aj = 0.0;
        ai = sum;
      }
      if (sum > c) {
        if (aj > c) {
          aj = c;
          ai = sum - c;
        }
      } else if (ai < 0.0) {
        ai = 0.0;
        aj = sum;
      }
    }
    alpha[i] = ai;
    alpha[j] = aj;
    const double di = ai - old_ai;
    const double dj = aj - old_aj;
    for (std::size_t t = 0; t < n; ++t) grad[t] += y[t] * (y[i] * qi[t] * di + y[j] * qj[t] * dj);
  }

  // rho from free multipliers, else the midpoint of the feasible interval.
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum_free = 0.0;
  std::size_t n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = y[t] * grad[t];
    if (upper(t)) {
      if (y[t] < 0) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else if (lower(t)) {
      if (y[t] > 0) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else {
      ++n_free;
      sum_free += yg;
    }
  }
  model.rho_ = n_free > 0 ? sum_free / static_cast<double>(n_free) : 0.5 * (ub + lb);
  model.alphas_ = alpha;
  model.kkt_gap_ = gap;
  model.converged_ = gap < options.tolerance;
  model.iterations_ = iter;

  std::vector<std::size_t> sv;
  for (std::size_t t = 0; t < n; ++t)
    if (alpha[t] > 0.0) {
      sv.push_back(t);
      model.coef_.push_back(alpha[t] * y[t]);
    }
  model.support_ = x.select_rows(sv);
  return model;
}

std::vector<double> SupportVectorMachine::decision_function(const FeatureMatrix& x) const {
  check_width(x);
  std::vector<double> out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    double acc = -rho_;
    for (std::size_t s = 0; s < support_.rows(); ++s) acc += coef_[s] * kernel_(support_.row(s), x.row(r));
    out[r] = acc;
  }
  return out;
}

std::vector<double> SupportVectorMachine::predict_score(const FeatureMatrix& x) const {
  auto out = decision_function(x);
  for (auto& v : out) v = logistic(v);
  return out;
}

}  // namespace qembed::learners
