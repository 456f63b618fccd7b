#include "qembed/fock/expm.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "qembed/error.hpp"

namespace qembed::fock {

namespace {

// Degree-13 Pade coefficients and the 1-norm bound below which the
// approximant is accurate to double precision without scaling.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

ComplexMatrix exp_diagonal(const ComplexMatrix& m) {
  std::vector<Complex> d(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) d[i] = std::exp(m(i, i));
  for (const auto& z : d) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NumericError("matrix_exponential: overflow on diagonal");
  }
  return ComplexMatrix::diagonal(d);
}

}  // namespace

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
  if (!m.square()) throw ShapeError("matrix_exponential: matrix must be square");
  if (!m.all_finite()) throw NumericError("matrix_exponential: non-finite input");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  if (m.is_diagonal()) return exp_diagonal(m);

  const double norm = m.norm1();
  int squarings = 0;
  if (norm > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  if (squarings > 1000) throw NumericError("matrix_exponential: norm too large to scale");

  ComplexMatrix a = m * Complex(std::ldexp(1.0, -squarings));
  const auto ident = ComplexMatrix::identity(n);
  const auto& b = kPade13;

  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  u_inner += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
  const ComplexMatrix u = a * u_inner;

  ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  v += b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;

  ComplexMatrix result = solve(v - u, v + u);
  for (int i = 0; i < squarings; ++i) {
    result = result * result;
    if (!result.all_finite()) throw NumericError("matrix_exponential: overflow while squaring");
  }
  if (!result.all_finite()) throw NumericError("matrix_exponential: non-finite result");
  return result;
}

}  // namespace qembed::fock
