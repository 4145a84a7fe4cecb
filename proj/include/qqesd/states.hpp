#pragma once

#include <cmath>
#include <string>

#include "qqesd/errors.hpp"
#include "qqesd/linalg.hpp"

namespace qqesd {

inline constexpr std::size_t kQubitDim = 2;
inline constexpr std::size_t kQutritDim = 3;
inline constexpr std::size_t kCompositeDim = kQubitDim * kQutritDim;

// Composite basis index for |a b>: a is the qubit level, b the qutrit level.
constexpr std::size_t basis_index(std::size_t qubit, std::size_t qutrit) { return kQutritDim * qubit + qutrit; }

// Coherence amplitude x of the initial family, validated to [0, 1/4].
class FamilyParam {
 public:
  static constexpr double kMax = 0.25;

  explicit FamilyParam(double x) : x_(x) {
    if (!(x >= 0.0 && x <= kMax)) {
      throw DomainError("family parameter x must lie in [0, 1/4], got " + std::to_string(x));
    }
  }

  double value() const { return x_; }

 private:
  double x_;
};

namespace detail {

// No range check; lets tests build the out-of-range (non-positive) members.
inline Matrix family_matrix(double x) {
  Matrix rho = Matrix::diagonal({0.25, 0.125, 0.125, 0.125, 0.125, 0.25});
  rho(basis_index(0, 0), basis_index(1, 2)) = x;
  rho(basis_index(1, 2), basis_index(0, 0)) = x;
  return rho;
}

}  // namespace detail

// diag(1/4, 1/8, 1/8, 1/8, 1/8, 1/4) with coherence x between |00> and |12>.
// Eigenvalues are 1/8 (x4) and 1/4 +- x. At zero noise the partial transpose
// has minimum eigenvalue 1/8 - x, so members with x <= 1/8 are PPT (separable).
inline Matrix rho_x(FamilyParam x) { return detail::family_matrix(x.value()); }

// Hermitian, unit trace and positive semidefinite, all within tol.
inline bool validate_density(const Matrix& m, double tol = kDefaultTolerance) {
  if (!m.is_square()) return false;
  if (max_abs_diff(m, adjoint(m)) > tol) return false;
  if (std::abs(trace(m) - 1.0) > tol) return false;
  try {
    return hermitian_spectrum(m, tol).min() >= -tol;
  } catch (const ConvergenceError&) {
    return false;
  }
}

}  // namespace qqesd
