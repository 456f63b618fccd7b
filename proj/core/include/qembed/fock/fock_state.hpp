#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qembed/fock/matrix.hpp"

namespace qembed::fock {

// Amplitudes over the truncated photon-number basis |0>..|dim-1>.
// Truncation may leak norm out of the retained space but never add it.
class FockVector {
 public:
  static constexpr double kNormSlack = 1e-9;

  explicit FockVector(std::vector<Complex> amps);
  static FockVector vacuum(std::size_t dim);
  static FockVector basis(std::size_t dim, std::size_t n);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t n) const { return amps_[n]; }

  double norm_squared() const;
  double probability(std::size_t n) const;
  // |amp_n|^2 for n < count.
  std::vector<double> probabilities(std::size_t count) const;

 private:
  std::vector<Complex> amps_;
};

struct LadderPair {
  ComplexMatrix annihilate;
  ComplexMatrix create;
  std::size_t dim = 0;
};

// a|n> = sqrt(n)|n-1>, a^dagger = conjugate transpose of a.
LadderPair ladder_pair(std::size_t dim);

// a^dagger a, diagonal 0..dim-1.
ComplexMatrix number_operator(const LadderPair& ladder);

}  // namespace qembed::fock
