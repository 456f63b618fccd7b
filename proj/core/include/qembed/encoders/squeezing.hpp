#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qembed/fock/fock_state.hpp"

namespace qembed::encoders {

inline constexpr double kDefaultSqueezeClamp = 1.0;
inline constexpr std::size_t kDefaultSqueezeDim = 60;

struct SqueezeParams {
  double r = 0.0;
  double phi = 0.0;  // radians, [0, 2pi)
  double clamp = kDefaultSqueezeClamp;
};

// S(zeta)|0> with S(zeta) = expm((zeta* a^2 - zeta a^dagger^2)/2), zeta = r e^{i phi}.
fock::FockVector squeeze_vacuum(const SqueezeParams& p, std::size_t dim);

// Evaluates S(zeta)|0> for many r at a fixed truncation. The generator
// (a^2 - a^dagger^2)/2 is diagonalized once; each state then costs O(dim^2).
// The phase enters as the diagonal rotation exp(i phi n/2), which maps
// S(r) onto S(r e^{i phi}) exactly in the truncated space.
class SqueezedVacuumBasis {
 public:
  explicit SqueezedVacuumBasis(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  fock::FockVector state(const SqueezeParams& p) const;

 private:
  std::size_t dim_;
  std::vector<double> eigenvalues_;                // of i * generator (Hermitian)
  std::vector<std::complex<double>> eigenvectors_;  // column-major, dim x dim
};

}  // namespace qembed::encoders
