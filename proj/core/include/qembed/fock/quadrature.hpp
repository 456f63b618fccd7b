#pragma once

#include "qembed/fock/fock_state.hpp"

namespace qembed::fock {

struct QuadratureVariances {
  double var_x = 0.0;
  double var_p = 0.0;

  double product() const { return var_x * var_p; }
};

// Quadratures x = (a + a^dagger)/2 and p = (a - a^dagger)/(2i); the vacuum
// has Var(x) = Var(p) = 1/4 in this scaling. States whose retained norm is
// below kMinQuadratureNorm are rejected with TruncationError.
inline constexpr double kMinQuadratureNorm = 0.999;

QuadratureVariances quadrature_variances(const FockVector& state);

}  // namespace qembed::fock
