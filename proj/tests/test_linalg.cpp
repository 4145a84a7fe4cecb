#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "qqesd/channels.hpp"
#include "qqesd/entanglement.hpp"
#include "qqesd/linalg.hpp"
#include "qqesd/states.hpp"
#include "test_support.hpp"

namespace qqesd {
namespace {

// Determinant by Gaussian elimination with partial pivoting (test oracle).
Complex determinant(Matrix m) {
  const std::size_t n = m.rows();
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (std::abs(m(pivot, col)) == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

Matrix shifted(const Matrix& a, double lambda) { return subtract(a, scale(lambda, Matrix::identity(a.rows()))); }

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(max_abs_diff(kron(Matrix::identity(2), Matrix::identity(3)), Matrix::identity(6)), 0.0);
}

TEST(Kron, PauliXSwapsQubitBlocks) {
  const Matrix k = kron(pauli(1), Matrix::identity(3));
  ASSERT_EQ(k.rows(), 6u);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(k(i, j), Complex((j == (i + 3) % 6) ? 1.0 : 0.0));
}

TEST(Kron, DiagonalProductRule) {
  const Complex w = omega();
  const Matrix k = kron(Matrix::diagonal({1.0, -1.0}), Matrix::diagonal({1.0, w, w * w}));
  const Matrix expected = Matrix::diagonal({1.0, w, w * w, -1.0, -w, -w * w});
  EXPECT_LT(max_abs_diff(k, expected), 1e-15);
}

TEST(Kron, RectangularShape) {
  const Matrix k = kron(Matrix(2, 3), Matrix(4, 1));
  EXPECT_EQ(k.rows(), 8u);
  EXPECT_EQ(k.cols(), 3u);
}

TEST(Kron, AssociativeAndMixedProduct) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing::random_matrix(rng, 2, 2);
    const Matrix b = testing::random_matrix(rng, 3, 3);
    const Matrix c = testing::random_matrix(rng, 2, 2);
    const Matrix d = testing::random_matrix(rng, 3, 3);
    EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    EXPECT_LT(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
  }
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(max_abs_diff(adjoint(Matrix::identity(3)), Matrix::identity(3)), 0.0);
  const auto [y, z] = weyl_generators();
  EXPECT_EQ(max_abs_diff(adjoint(y), transpose(y)), 0.0);
  const Complex w = omega();
  EXPECT_LT(max_abs_diff(adjoint(z), Matrix::diagonal({1.0, w * w, w})), 1e-15);
}

TEST(Adjoint, InvolutionAndReversal) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing::random_matrix(rng, 3, 4);
    const Matrix b = testing::random_matrix(rng, 4, 2);
    EXPECT_EQ(max_abs_diff(adjoint(adjoint(a)), a), 0.0);
    EXPECT_LT(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)), 1e-12);
  }
}

TEST(RingOps, WeylCubesAreIdentity) {
  const auto [y, z] = weyl_generators();
  EXPECT_EQ(max_abs_diff(matmul(y, matmul(y, y)), Matrix::identity(3)), 0.0);
  EXPECT_LT(max_abs_diff(matmul(z, matmul(z, z)), Matrix::identity(3)), 16 * std::numeric_limits<double>::epsilon());
}

TEST(RingOps, WeylGeneratorsAreUnitary) {
  const auto [y, z] = weyl_generators();
  EXPECT_LE(max_abs_diff(adjoint(y) * y, Matrix::identity(3)), 1e-15);
  EXPECT_LE(max_abs_diff(adjoint(z) * z, Matrix::identity(3)), 1e-15);
}

TEST(RingOps, TraceOfFamilyIsOne) {
  for (double x : {0.0, 0.1, 0.125, 0.25}) EXPECT_NEAR(trace(rho_x(FamilyParam(x))).real(), 1.0, 1e-15);
}

TEST(RingOps, DimensionMismatchThrows) {
  EXPECT_THROW(matmul(Matrix(2, 3), Matrix(2, 3)), DimensionError);
  EXPECT_THROW(add(Matrix(2, 2), Matrix(3, 3)), DimensionError);
  EXPECT_THROW(trace(Matrix(2, 3)), DimensionError);
  EXPECT_THROW(Matrix(2, 2, std::vector<Complex>(3)), DimensionError);
  EXPECT_THROW(Matrix(0, 2), DimensionError);
}

TEST(RingOps, NonFiniteEntriesRejected) {
  EXPECT_THROW(Matrix(1, 1, {Complex{std::nan(""), 0.0}}), DomainError);
}

TEST(HermitianSpectrum, Diagonal) {
  const Spectrum s = hermitian_spectrum(Matrix::diagonal({0.25, 0.125, 0.125, 0.125, 0.125, 0.25}));
  const std::vector<double> expected{0.125, 0.125, 0.125, 0.125, 0.25, 0.25};
  ASSERT_EQ(s.eigenvalues.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(s.eigenvalues[i], expected[i], 1e-15);
}

TEST(HermitianSpectrum, EmbeddedTwoByTwoBlock) {
  Matrix a = Matrix::diagonal({0.125, 0.125, 0.5, 0.5, 0.5, 0.5});
  a(0, 1) = a(1, 0) = 0.25;
  const Spectrum s = hermitian_spectrum(a);
  EXPECT_NEAR(s.eigenvalues.front(), -0.125, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 0.375, 1e-14);
}

TEST(HermitianSpectrum, PartialTransposeOfQuarterFamilyMember) {
  const Matrix pt = partial_transpose_qubit(rho_x(FamilyParam(0.25)));
  const Spectrum s = hermitian_spectrum(pt);
  const std::vector<double> expected{-0.125, 0.125, 0.125, 0.25, 0.25, 0.375};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(s.eigenvalues[i], expected[i], 1e-14);
  // Brute force: each value annihilates det(A - lambda I).
  for (double lambda : expected) EXPECT_LT(std::abs(determinant(shifted(pt, lambda))), 1e-14);
}

TEST(HermitianSpectrum, RandomHermitianProperties) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Matrix a = testing::random_hermitian(rng, n);
    const Spectrum s = hermitian_spectrum(a);
    ASSERT_EQ(s.eigenvalues.size(), n);
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    EXPECT_NEAR(s.sum(), trace(a).real(), 1e-10);
    double sq = 0.0;
    for (double l : s.eigenvalues) sq += l * l;
    EXPECT_NEAR(sq, trace(a * a).real(), 1e-10);
    EXPECT_LE(s.residual, 1e-12 * std::max(1.0, frobenius_norm(a)));
    for (double l : s.eigenvalues) {
      // relative to the scale of the characteristic polynomial
      EXPECT_LT(std::abs(determinant(shifted(a, l))), 1e-9 * std::pow(std::max(1.0, frobenius_norm(a)), n - 1));
    }
  }
}

TEST(HermitianSpectrum, ComplexOffDiagonalPhases) {
  // [[0, i], [-i, 0]] has eigenvalues -1, 1.
  Matrix a(2, 2, {0.0, Complex{0, 1}, Complex{0, -1}, 0.0});
  const Spectrum s = hermitian_spectrum(a);
  EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-14);
}

TEST(HermitianSpectrum, RejectsNonHermitianAndNonSquare) {
  Matrix a = Matrix::identity(3);
  a(0, 1) = 1e-6;
  EXPECT_THROW(hermitian_spectrum(a), NotHermitianError);
  EXPECT_THROW(hermitian_spectrum(Matrix(2, 3)), DimensionError);
}

}  // namespace
}  // namespace qqesd
