#include <gtest/gtest.h>

#include "qqesd/entanglement.hpp"
#include "qqesd/states.hpp"

namespace qqesd {
namespace {

TEST(FamilyParam, RangeIsValidated) {
  EXPECT_NO_THROW(FamilyParam(0.0));
  EXPECT_NO_THROW(FamilyParam(0.25));
  EXPECT_THROW(FamilyParam(-1e-9), DomainError);
  EXPECT_THROW(FamilyParam(0.2500001), DomainError);
  EXPECT_THROW(FamilyParam(std::nan("")), DomainError);
}

TEST(RhoX, Structure) {
  const Matrix rho = rho_x(FamilyParam(0.2));
  const std::vector<double> diag{0.25, 0.125, 0.125, 0.125, 0.125, 0.25};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      double expected = i == j ? diag[i] : 0.0;
      if ((i == 0 && j == 5) || (i == 5 && j == 0)) expected = 0.2;
      EXPECT_EQ(rho(i, j), Complex(expected)) << i << "," << j;
    }
}

TEST(RhoX, BasisOrder) {
  // |00>,|01>,|02>,|10>,|11>,|12>
  EXPECT_EQ(basis_index(0, 0), 0u);
  EXPECT_EQ(basis_index(0, 2), 2u);
  EXPECT_EQ(basis_index(1, 0), 3u);
  EXPECT_EQ(basis_index(1, 2), 5u);
}

TEST(RhoX, ZeroIsDiagonalAndPpt) {
  const Matrix rho = rho_x(FamilyParam(0.0));
  EXPECT_EQ(max_abs_diff(rho, Matrix::diagonal({0.25, 0.125, 0.125, 0.125, 0.125, 0.25})), 0.0);
  EXPECT_GT(hermitian_spectrum(partial_transpose_qubit(rho)).min(), 0.0);
}

TEST(RhoX, SpectrumIsEighthsAndQuarterPlusMinusX) {
  for (int i = 0; i <= 25; ++i) {
    const double x = i / 100.0;
    const Spectrum s = hermitian_spectrum(rho_x(FamilyParam(x)));
    std::vector<double> expected{0.125, 0.125, 0.125, 0.125, 0.25 - x, 0.25 + x};
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(s.eigenvalues[k], expected[k], 1e-14);
    EXPECT_NEAR(trace(rho_x(FamilyParam(x))).real(), 1.0, 1e-15);
  }
}

TEST(RhoX, QuarterIsBoundaryWithZeroEigenvalue) {
  EXPECT_NEAR(hermitian_spectrum(rho_x(FamilyParam(0.25))).min(), 0.0, 1e-15);
  EXPECT_TRUE(validate_density(rho_x(FamilyParam(0.25)), 1e-12));
}

TEST(ValidateDensity, Examples) {
  EXPECT_TRUE(validate_density(rho_x(FamilyParam(0.2)), 1e-12));
  EXPECT_FALSE(validate_density(detail::family_matrix(0.3), 1e-12));  // eigenvalue 1/4 - 0.3 < 0
  EXPECT_FALSE(validate_density(Matrix::identity(6), 1e-12));          // trace 6
  EXPECT_FALSE(validate_density(Matrix(2, 3), 1e-12));
  Matrix skew = rho_x(FamilyParam(0.1));
  skew(0, 5) = Complex{0.1, 0.01};
  EXPECT_FALSE(validate_density(skew, 1e-12));
}

TEST(ValidateDensity, WholeFamilyIsValid) {
  for (int i = 0; i <= 250; ++i) EXPECT_TRUE(validate_density(rho_x(FamilyParam(i / 1000.0)), 1e-12));
}

}  // namespace
}  // namespace qqesd
