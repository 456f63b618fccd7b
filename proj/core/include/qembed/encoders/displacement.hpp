#pragma once

#include <complex>
#include <cstddef>

#include "qembed/fock/fock_state.hpp"

namespace qembed::encoders {

inline constexpr double kDefaultAlphaClamp = 1.5;
inline constexpr std::size_t kDefaultDisplacementDim = 30;

struct DisplacementParams {
  std::complex<double> alpha{};
  double clamp = kDefaultAlphaClamp;
};

// Coherent state |alpha> truncated to dim levels, from the closed form
// <n|alpha> = exp(-|alpha|^2/2) alpha^n / sqrt(n!).
fock::FockVector displace_vacuum(const DisplacementParams& p, std::size_t dim);

// Same state built as expm(alpha a^dagger - alpha* a)|0>. Slower; kept as an
// independent route for cross-checking the closed form.
fock::FockVector displace_vacuum_expm(const DisplacementParams& p, std::size_t dim);

}  // namespace qembed::encoders
