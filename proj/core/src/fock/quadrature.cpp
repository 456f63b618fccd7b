#include "qembed/fock/quadrature.hpp"

#include <sstream>

#include "qembed/error.hpp"

namespace qembed::fock {

namespace {

Complex expectation(const ComplexMatrix& op, const FockVector& state) {
  const auto amps = state.amplitudes();
  const auto applied = op.apply(amps);
  Complex acc{};
  for (std::size_t i = 0; i < amps.size(); ++i) acc += std::conj(amps[i]) * applied[i];
  return acc;
}

}  // namespace

QuadratureVariances quadrature_variances(const FockVector& state) {
  const double norm = state.norm_squared();
  if (norm < kMinQuadratureNorm) {
    std::ostringstream msg;
    msg << "quadrature_variances: retained norm " << norm << " below " << kMinQuadratureNorm
        << "; increase the truncation dimension";
    throw TruncationError(msg.str());
  }
  const auto ladder = ladder_pair(state.dim());
  const ComplexMatrix x = 0.5 * (ladder.annihilate + ladder.create);
  const ComplexMatrix p = Complex(0.0, -0.5) * (ladder.annihilate - ladder.create);

  auto variance = [&](const ComplexMatrix& q) {
    const double mean = expectation(q, state).real() / norm;
    const double second = expectation(q * q, state).real() / norm;
    return second - mean * mean;
  };
  return {variance(x), variance(p)};
}

}  // namespace qembed::fock
