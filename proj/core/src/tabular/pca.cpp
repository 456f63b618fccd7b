#include "qembed/tabular/pca.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "qembed/error.hpp"

namespace qembed::tabular {

PcaModel pca_fit(const FeatureMatrix& x, std::size_t n_components) {
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  if (n < 2) throw ShapeError("pca_fit: need at least 2 rows");
  if (n_components == 0 || n_components > std::min(n, m))
    throw ShapeError("pca_fit: n_components must be in [1, min(rows, cols)]");

  PcaModel model;
  model.mean.assign(m, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) model.mean[c] += x(r, c);
  for (auto& v : model.mean) v /= static_cast<double>(n);

  const auto mi = static_cast<Eigen::Index>(m);
  Eigen::MatrixXd centered(static_cast<Eigen::Index>(n), mi);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c)
      centered(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = x(r, c) - model.mean[c];
  const Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw NumericError("pca_fit: eigensolver failed");
  // Eigen returns ascending eigenvalues.
  std::vector<double> eig(m);
  for (std::size_t k = 0; k < m; ++k) eig[k] = std::max(0.0, solver.eigenvalues()(mi - 1 - static_cast<Eigen::Index>(k)));
  double total = 0.0;
  for (double e : eig) total += e;

  model.full_spectrum_ratio.assign(m, 0.0);
  if (total > 0.0)
    for (std::size_t k = 0; k < m; ++k) model.full_spectrum_ratio[k] = eig[k] / total;

  model.components = FeatureMatrix(n_components, m);
  for (std::size_t k = 0; k < n_components; ++k) {
    const auto col = solver.eigenvectors().col(mi - 1 - static_cast<Eigen::Index>(k));
    Eigen::Index pivot = 0;
    col.cwiseAbs().maxCoeff(&pivot);
    const double sign = col(pivot) < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < m; ++c) model.components(k, c) = sign * col(static_cast<Eigen::Index>(c));
    model.explained_variance.push_back(eig[k]);
    model.explained_variance_ratio.push_back(model.full_spectrum_ratio[k]);
  }
  return model;
}

FeatureMatrix pca_transform(const PcaModel& model, const FeatureMatrix& x) {
  const std::size_t m = model.mean.size();
  if (x.cols() != m) throw ShapeError("pca_transform: column count differs from fit");
  const std::size_t k = model.n_components();
  FeatureMatrix out(x.rows(), k);
  std::vector<double> centered(m);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < m; ++c) centered[c] = x(r, c) - model.mean[c];
    for (std::size_t j = 0; j < k; ++j) {
      double acc = 0.0;
      for (std::size_t c = 0; c < m; ++c) acc += centered[c] * model.components(j, c);
      out(r, j) = acc;
    }
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < k; ++j) names.push_back("pc" + std::to_string(j + 1));
  out.set_names(std::move(names));
  return out;
}

FeatureMatrix pca_inverse_transform(const PcaModel& model, const FeatureMatrix& scores) {
  const std::size_t k = model.n_components();
  if (scores.cols() != k) throw ShapeError("pca_inverse_transform: score width differs from component count");
  const std::size_t m = model.mean.size();
  FeatureMatrix out(scores.rows(), m);
  for (std::size_t r = 0; r < scores.rows(); ++r)
    for (std::size_t c = 0; c < m; ++c) {
      double acc = model.mean[c];
      for (std::size_t j = 0; j < k; ++j) acc += scores(r, j) * model.components(j, c);
      out(r, c) = acc;
    }
  return out;
}

PcaModel pca_truncate(const PcaModel& model, std::size_t n_components) {
  if (n_components == 0 || n_components > model.n_components())
    throw ShapeError("pca_truncate: n_components out of range");
  PcaModel out;
  out.mean = model.mean;
  std::vector<std::size_t> rows(n_components);
  for (std::size_t i = 0; i < n_components; ++i) rows[i] = i;
  out.components = model.components.select_rows(rows);
  out.explained_variance.assign(model.explained_variance.begin(),
                                model.explained_variance.begin() + static_cast<std::ptrdiff_t>(n_components));
  out.explained_variance_ratio.assign(model.explained_variance_ratio.begin(),
                                      model.explained_variance_ratio.begin() + static_cast<std::ptrdiff_t>(n_components));
  out.full_spectrum_ratio = model.full_spectrum_ratio;
  return out;
}

std::vector<double> cumulative(const std::vector<double>& ratios) {
  std::vector<double> out(ratios.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < ratios.size(); ++i) out[i] = acc += ratios[i];
  return out;
}

std::size_t elbow_index(const std::vector<double>& ratios) {
  if (ratios.size() < 3) throw DegenerateCurveError("elbow_index: need at least 3 components");
  const auto curve = cumulative(ratios);
  const double last = static_cast<double>(curve.size() - 1);
  const double slope = (curve.back() - curve.front()) / last;
  const double norm = std::sqrt(1.0 + slope * slope);
  std::size_t best = 0;
  double best_dist = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double chord = curve.front() + slope * static_cast<double>(i);
    const double dist = std::abs(curve[i] - chord) / norm;
    if (dist > best_dist + 1e-12) {
      best_dist = dist;
      best = i;
    }
  }
  return best;
}

}  // namespace qembed::tabular
