#pragma once

#include "qembed/fock/matrix.hpp"

namespace qembed::fock {

// e^M by scaling and squaring around a degree-13 Pade approximant.
// Diagonal inputs are exponentiated entrywise. Throws ShapeError for
// non-square input and NumericError if the result overflows.
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

}  // namespace qembed::fock
