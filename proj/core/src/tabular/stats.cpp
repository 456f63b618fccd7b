#include "qembed/tabular/stats.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qembed/error.hpp"

namespace qembed::tabular {

CorrelationResult pearson_corr(const FeatureMatrix& x) {
  if (x.rows() < 2) throw ShapeError("pearson_corr: need at least 2 rows");
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  std::vector<double> mean(m, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) mean[c] += x(r, c);
  for (auto& v : mean) v /= static_cast<double>(n);

  std::vector<double> ss(m * m, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      const double di = x(r, i) - mean[i];
      for (std::size_t j = i; j < m; ++j) ss[i * m + j] += di * (x(r, j) - mean[j]);
    }
  }

  CorrelationResult out{FeatureMatrix(m, m, std::vector<double>(m * m, 0.0), x.names()),
                        std::vector<bool>(m, false)};
  for (std::size_t i = 0; i < m; ++i) out.zero_variance[i] = !(ss[i * m + i] > 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    out.matrix(i, i) = 1.0;
    for (std::size_t j = i + 1; j < m; ++j) {
      double rho = 0.0;
      if (!out.zero_variance[i] && !out.zero_variance[j]) {
        rho = ss[i * m + j] / std::sqrt(ss[i * m + i] * ss[j * m + j]);
        rho = std::clamp(rho, -1.0, 1.0);
      }
      out.matrix(i, j) = rho;
      out.matrix(j, i) = rho;
    }
  }
  return out;
}

VifResult vif_scores(const FeatureMatrix& x) {
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  if (m < 2) throw ShapeError("vif_scores: need at least 2 columns");
  if (n < 2) throw ShapeError("vif_scores: need at least 2 rows");

  Eigen::MatrixXd data(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = x(r, c);

  VifResult out{std::vector<double>(m, kVifCap), std::vector<bool>(m, false)};
  const auto rows = static_cast<Eigen::Index>(n);
  for (std::size_t j = 0; j < m; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const Eigen::VectorXd target = data.col(jj);
    const double mean = target.mean();
    const double sst = (target.array() - mean).square().sum();
    if (!(sst > 0.0)) {
      out.degenerate[j] = true;
      continue;
    }
    Eigen::MatrixXd design(rows, static_cast<Eigen::Index>(m));
    design.col(0).setOnes();
    Eigen::Index k = 1;
    for (std::size_t c = 0; c < m; ++c)
      if (c != j) design.col(k++) = data.col(static_cast<Eigen::Index>(c));
    const Eigen::VectorXd beta = design.colPivHouseholderQr().solve(target);
    const double sse = (target - design * beta).squaredNorm();
    const double unexplained = sse / sst;
    out.scores[j] = unexplained <= 1.0 / kVifCap ? kVifCap : 1.0 / unexplained;
  }
  return out;
}

}  // namespace qembed::tabular
