#include "qembed/fock/fock_state.hpp"

#include <cmath>
#include <string>

#include "qembed/error.hpp"

namespace qembed::fock {

FockVector::FockVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
  if (amps_.size() < 2) {
    throw InvalidDimensionError("FockVector: truncation dimension must be >= 2, got " +
                                std::to_string(amps_.size()));
  }
  for (const auto& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NumericError("FockVector: non-finite amplitude");
  }
  if (norm_squared() > 1.0 + kNormSlack) {
    throw NumericError("FockVector: norm exceeds 1 (truncation cannot create norm)");
  }
}

FockVector FockVector::vacuum(std::size_t dim) { return basis(dim, 0); }

FockVector FockVector::basis(std::size_t dim, std::size_t n) {
  if (dim < 2) throw InvalidDimensionError("FockVector::basis: dim must be >= 2");
  if (n >= dim) throw InvalidDimensionError("FockVector::basis: index outside truncation");
  std::vector<Complex> amps(dim);
  amps[n] = 1.0;
  return FockVector(std::move(amps));
}

double FockVector::norm_squared() const {
  double s = 0.0;
  for (const auto& z : amps_) s += std::norm(z);
  return s;
}

double FockVector::probability(std::size_t n) const { return n < amps_.size() ? std::norm(amps_[n]) : 0.0; }

std::vector<double> FockVector::probabilities(std::size_t count) const {
  std::vector<double> p(count);
  for (std::size_t n = 0; n < count; ++n) p[n] = probability(n);
  return p;
}

LadderPair ladder_pair(std::size_t dim) {
  if (dim < 2) {
    throw InvalidDimensionError("ladder_pair: dim must be >= 2, got " + std::to_string(dim));
  }
  ComplexMatrix a(dim, dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  LadderPair pair{a, a.adjoint(), dim};
  return pair;
}

ComplexMatrix number_operator(const LadderPair& ladder) { return ladder.create * ladder.annihilate; }

}  // namespace qembed::fock
