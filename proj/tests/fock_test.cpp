#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qembed/error.hpp"
#include "qembed/fock/expm.hpp"
#include "qembed/fock/fock_state.hpp"
#include "qembed/fock/matrix.hpp"
#include "qembed/fock/quadrature.hpp"
#include "support/oracles.hpp"

namespace {

using qembed::fock::Complex;
using qembed::fock::ComplexMatrix;
using namespace qembed::fock;

ComplexMatrix random_anti_hermitian(std::size_t n, std::mt19937_64& gen, double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex(0.0, d(gen));
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z(d(gen), d(gen));
      m(i, j) = z;
      m(j, i) = -std::conj(z);
    }
  }
  return m;
}

oracle::Dense to_dense(const ComplexMatrix& m) {
  oracle::Dense d(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j);
  return d;
}

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), qembed::NumericError);
  EXPECT_THROW(ComplexMatrix(2, 2, {Complex(1.0, 0.0)}), qembed::ShapeError);
}

TEST(ComplexMatrix, SolveRecoversKnownSolution) {
  std::mt19937_64 gen(3);
  const auto a = random_anti_hermitian(5, gen) + ComplexMatrix::identity(5) * Complex(3.0, 0.0);
  const auto x = random_anti_hermitian(5, gen);
  EXPECT_LT(max_abs_diff(solve(a, a * x), x), 1e-12);
}

TEST(LadderPair, MatchesDefinitionAtDim3) {
  const auto l = ladder_pair(3);
  const double expected[3][3] = {{0, 1, 0}, {0, 0, std::sqrt(2.0)}, {0, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(l.annihilate(i, j), Complex(expected[i][j], 0.0));
      EXPECT_EQ(l.create(j, i), std::conj(l.annihilate(i, j)));
    }
}

TEST(LadderPair, NumberOperatorIsDiagonalCount) {
  const auto two = number_operator(ladder_pair(2));
  EXPECT_EQ(two(0, 0), Complex(0.0));
  EXPECT_EQ(two(1, 1), Complex(1.0));
  EXPECT_EQ(two(0, 1), Complex(0.0));

  const auto five = number_operator(ladder_pair(5));
  const auto out = five.apply(FockVector::basis(5, 3).amplitudes());
  for (std::size_t n = 0; n < 5; ++n) EXPECT_NEAR(std::abs(out[n] - Complex(n == 3 ? 3.0 : 0.0)), 0.0, 1e-12);
}

TEST(LadderPair, RejectsDimBelowTwo) {
  EXPECT_THROW(ladder_pair(1), qembed::InvalidDimensionError);
  EXPECT_THROW(ladder_pair(0), qembed::InvalidDimensionError);
}

TEST(LadderPair, CommutatorIsIdentityAwayFromCutoff) {
  for (std::size_t dim = 2; dim <= 40; ++dim) {
    const auto l = ladder_pair(dim);
    const auto c = l.annihilate * l.create - l.create * l.annihilate;
    for (std::size_t i = 0; i + 1 < dim; ++i)
      for (std::size_t j = 0; j + 1 < dim; ++j)
        EXPECT_NEAR(std::abs(c(i, j) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-12) << dim;
  }
}

TEST(FockVector, EnforcesInvariants) {
  EXPECT_THROW(FockVector({Complex(1.0)}), qembed::InvalidDimensionError);
  EXPECT_THROW(FockVector({Complex(1.0), Complex(0.1)}), qembed::NumericError);
  EXPECT_NO_THROW(FockVector({Complex(0.6), Complex(0.0, 0.8)}));
  EXPECT_NO_THROW(FockVector({Complex(0.5), Complex(0.5)}));
}

TEST(MatrixExponential, ZeroGivesIdentity) {
  EXPECT_EQ(max_abs_diff(matrix_exponential(ComplexMatrix(4, 4)), ComplexMatrix::identity(4)), 0.0);
}

TEST(MatrixExponential, DiagonalIsEntrywise) {
  const std::vector<Complex> d = {{0, 1.7}, {0, -0.7}, {0, -0.1}, {0, -0.9}};
  const auto e = matrix_exponential(ComplexMatrix::diagonal(d));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(e(i, i) - std::exp(d[i])), 0.0, 1e-15);
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) EXPECT_EQ(e(i, j), Complex(0.0));
  }
}

TEST(MatrixExponential, MatchesTaylorSeries) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_anti_hermitian(6, gen, 0.5);
    const auto ref = oracle::taylor_exp(to_dense(m), 40);
    const auto e = matrix_exponential(m);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) EXPECT_NEAR(std::abs(e(i, j) - ref(i, j)), 0.0, 1e-10);
  }
}

TEST(MatrixExponential, MatchesTaylorSeriesOnNonNormalInput) {
  std::mt19937_64 gen(12);
  std::normal_distribution<double> d(0.0, 0.4);
  ComplexMatrix m(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = Complex(d(gen), d(gen));
  const auto ref = oracle::taylor_exp(to_dense(m), 60);
  const auto e = matrix_exponential(m);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(std::abs(e(i, j) - ref(i, j)), 0.0, 1e-12);
}

TEST(MatrixExponential, AntiHermitianGivesUnitary) {
  std::mt19937_64 gen(5);
  for (std::size_t n : {2u, 7u, 20u, 40u}) {
    const auto u = matrix_exponential(random_anti_hermitian(n, gen, 2.0));
    EXPECT_LT(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(n)), 1e-10) << n;
  }
}

TEST(MatrixExponential, InverseIsExpOfNegation) {
  std::mt19937_64 gen(8);
  std::normal_distribution<double> d(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = Complex(d(gen), d(gen));
    m *= Complex(5.0 / m.norm1(), 0.0);  // |M|_1 = 5
    const auto p = matrix_exponential(m) * matrix_exponential(m * Complex(-1.0, 0.0));
    EXPECT_LT(max_abs_diff(p, ComplexMatrix::identity(6)), 1e-9);
  }
}

TEST(MatrixExponential, Errors) {
  EXPECT_THROW(matrix_exponential(ComplexMatrix(2, 3)), qembed::ShapeError);
  ComplexMatrix big(2, 2);
  big(0, 0) = 800.0;
  big(0, 1) = 1.0;
  EXPECT_THROW(matrix_exponential(big), qembed::NumericError);
}

TEST(Quadrature, VacuumHasQuarterVariances) {
  const auto q = quadrature_variances(FockVector::vacuum(10));
  EXPECT_DOUBLE_EQ(q.var_x, 0.25);
  EXPECT_DOUBLE_EQ(q.var_p, 0.25);
}

TEST(Quadrature, NumberStateVariances) {
  // <n| x^2 |n> = (2n + 1) / 4 and <x> = 0.
  for (std::size_t n = 0; n < 6; ++n) {
    const auto q = quadrature_variances(FockVector::basis(12, n));
    EXPECT_NEAR(q.var_x, (2.0 * n + 1.0) / 4.0, 1e-14);
    EXPECT_NEAR(q.var_p, (2.0 * n + 1.0) / 4.0, 1e-14);
  }
}

TEST(Quadrature, RejectsTruncatedState) {
  EXPECT_THROW(quadrature_variances(FockVector({Complex(0.9), Complex(0.0)})), qembed::TruncationError);
}

}  // namespace
