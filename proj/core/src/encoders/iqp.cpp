#include "qembed/encoders/iqp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qembed/error.hpp"

namespace qembed::encoders {

double order_independent_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  // Neumaier compensated summation.
  double sum = 0.0;
  double carry = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t))
      carry += (sum - next) + t;
    else
      carry += (t - next) + sum;
    sum = next;
  }
  return sum + carry;
}

std::vector<double> QubitStateVector::probabilities() const {
  std::vector<double> p(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) p[i] = std::norm(amps[i]);
  return p;
}

IqpPhaseVector iqp_phases(std::span<const double> x, std::size_t qubits) {
  if (x.size() != qubits) {
    std::ostringstream msg;
    msg << "iqp_phases: expected " << qubits << " features, got " << x.size();
    throw ShapeError(msg.str());
  }
  if (qubits == 0 || qubits > kMaxIqpQubits)
    throw ShapeError("iqp_phases: qubit count must be in [1, 10]");
  for (double v : x)
    if (!std::isfinite(v)) throw DataError("iqp_phases: non-finite feature");

  const std::size_t states = std::size_t{1} << qubits;
  IqpPhaseVector out{qubits, std::vector<double>(states)};
  std::vector<double> terms;
  terms.reserve(qubits * (qubits + 1) / 2);
  std::vector<double> sign(qubits);
  for (std::size_t z = 0; z < states; ++z) {
    for (std::size_t i = 0; i < qubits; ++i) {
      const bool bit = (z >> (qubits - 1 - i)) & 1U;
      sign[i] = bit ? -1.0 : 1.0;
    }
    terms.clear();
    for (std::size_t i = 0; i < qubits; ++i) terms.push_back(sign[i] * x[i]);
    for (std::size_t i = 0; i < qubits; ++i)
      for (std::size_t j = i + 1; j < qubits; ++j) terms.push_back(sign[i] * sign[j] * (x[i] * x[j]));
    out.phases[z] = order_independent_sum(terms);
  }
  return out;
}

namespace {

// In-place H^n on a 2^n amplitude vector.
void walsh_hadamard(std::vector<std::complex<double>>& v) {
  const double scale = 1.0 / std::sqrt(2.0);
  for (std::size_t half = 1; half < v.size(); half <<= 1) {
    for (std::size_t base = 0; base < v.size(); base += 2 * half) {
      for (std::size_t k = base; k < base + half; ++k) {
        const auto u = v[k];
        const auto w = v[k + half];
        v[k] = (u + w) * scale;
        v[k + half] = (u - w) * scale;
      }
    }
  }
}

}  // namespace

QubitStateVector iqp_encode(const IqpPhaseVector& phases) {
  const std::size_t states = phases.phases.size();
  if (states != (std::size_t{1} << phases.qubits)) throw ShapeError("iqp_encode: phase vector length");
  const double amp = 1.0 / std::sqrt(static_cast<double>(states));
  QubitStateVector out{phases.qubits, std::vector<std::complex<double>>(states)};
  for (std::size_t z = 0; z < states; ++z) out.amps[z] = std::polar(amp, phases.phases[z]);
  walsh_hadamard(out.amps);
  return out;
}

QubitStateVector iqp_encode(std::span<const double> x, std::size_t qubits) {
  return iqp_encode(iqp_phases(x, qubits));
}

}  // namespace qembed::encoders
