#include "qembed/encoders/squeezing.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qembed/error.hpp"
#include "qembed/fock/expm.hpp"

namespace qembed::encoders {

namespace {

void check_params(const SqueezeParams& p) {
  if (!std::isfinite(p.r) || !std::isfinite(p.phi))
    throw DomainError("squeezing: parameters must be finite");
  if (p.r < 0.0) throw DomainError("squeezing: r must be >= 0");
  if (p.r > p.clamp) {
    std::ostringstream msg;
    msg << "squeezing: r = " << p.r << " exceeds clamp " << p.clamp;
    throw DomainError(msg.str());
  }
  if (p.phi < 0.0 || p.phi >= 2.0 * std::numbers::pi)
    throw DomainError("squeezing: phi must lie in [0, 2pi)");
}

}  // namespace

fock::FockVector squeeze_vacuum(const SqueezeParams& p, std::size_t dim) {
  if (dim < 2) throw InvalidDimensionError("squeeze_vacuum: dim must be >= 2");
  check_params(p);
  const auto ladder = fock::ladder_pair(dim);
  const auto a2 = ladder.annihilate * ladder.annihilate;
  const auto ad2 = ladder.create * ladder.create;
  const fock::Complex zeta = std::polar(p.r, p.phi);
  const auto generator = 0.5 * (std::conj(zeta) * a2 - zeta * ad2);
  const auto unitary = fock::matrix_exponential(generator);
  std::vector<fock::Complex> amps(dim);
  for (std::size_t n = 0; n < dim; ++n) amps[n] = unitary(n, 0);
  return fock::FockVector(std::move(amps));
}

SqueezedVacuumBasis::SqueezedVacuumBasis(std::size_t dim) : dim_(dim) {
  if (dim < 2) throw InvalidDimensionError("SqueezedVacuumBasis: dim must be >= 2");
  // i * (a^2 - a^dagger^2)/2 is Hermitian with purely imaginary entries.
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t n = 2; n < dim; ++n) {
    const double w = 0.5 * std::sqrt(static_cast<double>(n) * static_cast<double>(n - 1));
    const auto lo = static_cast<Eigen::Index>(n - 2);
    const auto hi = static_cast<Eigen::Index>(n);
    h(lo, hi) = std::complex<double>(0.0, w);
    h(hi, lo) = std::complex<double>(0.0, -w);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw NumericError("SqueezedVacuumBasis: eigensolver failed");
  eigenvalues_.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
  eigenvectors_.assign(solver.eigenvectors().data(), solver.eigenvectors().data() + dim * dim);
}

fock::FockVector SqueezedVacuumBasis::state(const SqueezeParams& p) const {
  check_params(p);
  // generator G = -i H, so exp(r G)|0> = sum_k v_k exp(-i r lambda_k) conj(v_k[0]).
  std::vector<fock::Complex> amps(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const fock::Complex* v = eigenvectors_.data() + k * dim_;
    const fock::Complex coeff = std::polar(1.0, -p.r * eigenvalues_[k]) * std::conj(v[0]);
    if (coeff == fock::Complex{}) continue;
    for (std::size_t n = 0; n < dim_; ++n) amps[n] += coeff * v[n];
  }
  if (p.phi != 0.0) {
    for (std::size_t n = 1; n < dim_; ++n) amps[n] *= std::polar(1.0, 0.5 * p.phi * static_cast<double>(n));
  }
  return fock::FockVector(std::move(amps));
}

}  // namespace qembed::encoders
