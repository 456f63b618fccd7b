#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qembed::encoders {

inline constexpr std::size_t kMaxIqpQubits = 10;

// Diagonal phases of exp(i (sum_i x_i Z_i + sum_{i<j} x_i x_j Z_i Z_j)),
// one per computational basis string. Qubit 0 is the most significant bit.
struct IqpPhaseVector {
  std::size_t qubits = 0;
  std::vector<double> phases;
};

struct QubitStateVector {
  std::size_t qubits = 0;
  std::vector<std::complex<double>> amps;

  std::vector<double> probabilities() const;
};

// Phase terms are summed in a canonical order, so any permutation of the
// commuting Z terms produces bit-identical phases.
IqpPhaseVector iqp_phases(std::span<const double> x, std::size_t qubits);

// H^n D(x) H^n |0...0>.
QubitStateVector iqp_encode(std::span<const double> x, std::size_t qubits);
QubitStateVector iqp_encode(const IqpPhaseVector& phases);

// Sum of terms independent of their order: sorted, then compensated.
double order_independent_sum(std::vector<double> terms);

}  // namespace qembed::encoders
