#include "qembed/encoders/displacement.hpp"

#include <cmath>
#include <sstream>

#include "qembed/error.hpp"
#include "qembed/fock/expm.hpp"

namespace qembed::encoders {

namespace {

void check_alpha(const DisplacementParams& p) {
  if (!std::isfinite(p.alpha.real()) || !std::isfinite(p.alpha.imag()))
    throw DomainError("displacement: alpha must be finite");
  if (std::abs(p.alpha) > p.clamp) {
    std::ostringstream msg;
    msg << "displacement: |alpha| = " << std::abs(p.alpha) << " exceeds clamp " << p.clamp;
    throw DomainError(msg.str());
  }
}

}  // namespace

fock::FockVector displace_vacuum(const DisplacementParams& p, std::size_t dim) {
  if (dim < 2) throw InvalidDimensionError("displace_vacuum: dim must be >= 2");
  check_alpha(p);
  std::vector<fock::Complex> amps(dim);
  amps[0] = std::exp(-0.5 * std::norm(p.alpha));
  for (std::size_t n = 1; n < dim; ++n)
    amps[n] = amps[n - 1] * p.alpha / std::sqrt(static_cast<double>(n));
  return fock::FockVector(std::move(amps));
}

fock::FockVector displace_vacuum_expm(const DisplacementParams& p, std::size_t dim) {
  if (dim < 2) throw InvalidDimensionError("displace_vacuum_expm: dim must be >= 2");
  check_alpha(p);
  const auto ladder = fock::ladder_pair(dim);
  const auto generator = p.alpha * ladder.create - std::conj(p.alpha) * ladder.annihilate;
  const auto unitary = fock::matrix_exponential(generator);
  std::vector<fock::Complex> amps(dim);
  for (std::size_t n = 0; n < dim; ++n) amps[n] = unitary(n, 0);
  return fock::FockVector(std::move(amps));
}

}  // namespace qembed::encoders
