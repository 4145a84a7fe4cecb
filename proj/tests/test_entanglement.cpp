#include <gtest/gtest.h>

#include <random>

#include "qqesd/channels.hpp"
#include "qqesd/entanglement.hpp"
#include "qqesd/states.hpp"
#include "test_support.hpp"

namespace qqesd {
namespace {

TEST(PartialTranspose, InvolutionTraceAndHermiticity) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix h = testing::random_hermitian(rng, 6);
    const Matrix pt = partial_transpose_qubit(h);
    EXPECT_LE(max_abs_diff(partial_transpose_qubit(pt), h), 1e-13);
    EXPECT_LE(std::abs(trace(pt) - trace(h)), 1e-13);
    EXPECT_LE(max_abs_diff(pt, adjoint(pt)), 1e-13);
  }
}

TEST(PartialTranspose, BlockBookkeeping) {
  std::mt19937_64 rng(22);
  const Matrix m = testing::random_matrix(rng, 6, 6);
  const Matrix pt = partial_transpose_qubit(m);
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(pt(b, c), m(b, c));              // B00
      EXPECT_EQ(pt(b, 3 + c), m(3 + b, c));      // B10 moves up
      EXPECT_EQ(pt(3 + b, c), m(b, 3 + c));      // B01 moves down
      EXPECT_EQ(pt(3 + b, 3 + c), m(3 + b, 3 + c));
    }
}

TEST(PartialTranspose, MovesFamilyCoherence) {
  const Matrix pt = partial_transpose_qubit(rho_x(FamilyParam(0.2)));
  EXPECT_EQ(pt(0, 5), Complex(0.0));
  EXPECT_EQ(pt(basis_index(0, 2), basis_index(1, 0)), Complex(0.2));
  EXPECT_EQ(pt(basis_index(1, 0), basis_index(0, 2)), Complex(0.2));
  EXPECT_EQ(pt(2, 2), Complex(0.125));
  EXPECT_EQ(pt(3, 3), Complex(0.125));
}

TEST(PartialTranspose, DiagonalUnchanged) {
  const Matrix d = Matrix::diagonal({0.1, 0.2, 0.3, 0.15, 0.15, 0.1});
  EXPECT_EQ(max_abs_diff(partial_transpose_qubit(d), d), 0.0);
  EXPECT_THROW(partial_transpose_qubit(Matrix::identity(4)), DimensionError);
}

TEST(Negativity, FamilyExamples) {
  EXPECT_NEAR(negativity_standard(rho_x(FamilyParam(0.10))).negativity, 0.0, 1e-15);
  EXPECT_NEAR(negativity_standard(rho_x(FamilyParam(0.10))).min_eigenvalue, 0.025, 1e-14);
  EXPECT_NEAR(negativity_standard(rho_x(FamilyParam(0.25))).negativity, 0.125, 1e-14);
  EXPECT_EQ(negativity_standard(scale(1.0 / 6.0, Matrix::identity(6))).negativity, 0.0);
}

TEST(Negativity, BoundaryEighthIsZero) {
  const NegativityResult r = negativity_standard(rho_x(FamilyParam(0.125)));
  EXPECT_EQ(r.negativity, 0.0);
  EXPECT_NEAR(r.min_eigenvalue, 0.0, 1e-15);
}

TEST(Negativity, ZeroNoiseMatchesBlockFormula) {
  for (int i = 0; i <= 25; ++i) {
    const double x = i / 100.0;
    const auto [lo, hi] = testing::block_eigenvalues(0.125, x, 0.125);
    (void)hi;
    EXPECT_NEAR(negativity_standard(rho_x(FamilyParam(x))).negativity, std::max(0.0, -lo), 1e-12);
  }
}

TEST(Negativity, ProductStatesHaveNone) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix rho = kron(testing::random_state(rng, 2), testing::random_state(rng, 3));
    const NegativityResult r = negativity_standard(rho);
    EXPECT_EQ(r.negativity, 0.0);
    EXPECT_GE(r.min_eigenvalue, -1e-12);
  }
}

TEST(Negativity, InvariantsOnRandomStates) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix rho = testing::random_state(rng, 6);
    const NegativityResult r = negativity_standard(rho);
    EXPECT_GE(r.negativity, 0.0);
    EXPECT_EQ(r.negativity == 0.0, r.min_eigenvalue >= -1e-12);
    double neg = 0.0;
    for (double l : r.spectrum.eigenvalues)
      if (l < -1e-12) neg -= l;
    EXPECT_EQ(neg, r.negativity);
    // trace-norm form and transposition side give the same value
    EXPECT_NEAR(negativity_trace_norm(rho), r.negativity, 1e-12);
    const Spectrum other = hermitian_spectrum(partial_transpose_qutrit(rho));
    double neg_other = 0.0;
    for (double l : other.eigenvalues)
      if (l < -1e-12) neg_other -= l;
    EXPECT_NEAR(neg_other, r.negativity, 1e-12);
  }
}

TEST(Negativity, ContinuousInNoiseParameter) {
  // ESD shows up as negativity reaching zero, not as a jump.
  const double delta = 1e-4;
  for (double x : {0.15, 0.2, 0.25}) {
    double worst_slope = 0.0;
    for (int i = 0; i + 1 <= 100; ++i) {
      const double p = i / 100.0 * (1.0 - delta);
      const Matrix rho = rho_x(FamilyParam(x));
      const double a = negativity_standard(evolve(NoiseScenario::collective(p), rho)).negativity;
      const double b = negativity_standard(evolve(NoiseScenario::collective(p + delta), rho)).negativity;
      worst_slope = std::max(worst_slope, std::abs(b - a) / delta);
    }
    // Lipschitz bound: each PT eigenvalue moves at most ~1 per unit p.
    EXPECT_LT(worst_slope, 2.0) << "x=" << x;
  }
}

}  // namespace
}  // namespace qqesd
