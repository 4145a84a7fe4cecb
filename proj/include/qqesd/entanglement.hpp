#pragma once

#include <algorithm>
#include <cmath>

#include "qqesd/errors.hpp"
#include "qqesd/linalg.hpp"
#include "qqesd/states.hpp"

namespace qqesd {

namespace detail {

inline void require_composite(const Matrix& rho, const char* who) {
  if (rho.rows() != kCompositeDim || rho.cols() != kCompositeDim) {
    throw DimensionError(std::string(who) + ": expected a 6x6 matrix");
  }
}

}  // namespace detail

// Transpose on the qubit index: blocks [[B00, B01], [B10, B11]] -> [[B00, B10], [B01, B11]].
inline Matrix partial_transpose_qubit(const Matrix& rho) {
  detail::require_composite(rho, "partial_transpose_qubit");
  Matrix out(kCompositeDim, kCompositeDim);
  for (std::size_t a = 0; a < kQubitDim; ++a)
    for (std::size_t ap = 0; ap < kQubitDim; ++ap)
      for (std::size_t b = 0; b < kQutritDim; ++b)
        for (std::size_t bp = 0; bp < kQutritDim; ++bp)
          out(basis_index(a, b), basis_index(ap, bp)) = rho(basis_index(ap, b), basis_index(a, bp));
  return out;
}

// Transpose on the qutrit index (each 3x3 block transposed in place).
inline Matrix partial_transpose_qutrit(const Matrix& rho) {
  detail::require_composite(rho, "partial_transpose_qutrit");
  Matrix out(kCompositeDim, kCompositeDim);
  for (std::size_t a = 0; a < kQubitDim; ++a)
    for (std::size_t ap = 0; ap < kQubitDim; ++ap)
      for (std::size_t b = 0; b < kQutritDim; ++b)
        for (std::size_t bp = 0; bp < kQutritDim; ++bp)
          out(basis_index(a, b), basis_index(ap, bp)) = rho(basis_index(a, bp), basis_index(ap, b));
  return out;
}

struct NegativityResult {
  double negativity = 0.0;
  double min_eigenvalue = 0.0;
  Spectrum spectrum;  // of the partial transpose
};

// Sum of |lambda| over the negative eigenvalues of the qubit partial transpose.
// Eigenvalues with |lambda| <= tol count as zero.
inline NegativityResult negativity_standard(const Matrix& rho, double tol = kDefaultTolerance) {
  detail::require_composite(rho, "negativity_standard");
  NegativityResult result;
  result.spectrum = hermitian_spectrum(partial_transpose_qubit(rho), tol);
  result.min_eigenvalue = result.spectrum.min();
  for (double lambda : result.spectrum.eigenvalues) {
    if (lambda < -tol) result.negativity += -lambda;
  }
  return result;
}

// (||rho^{T_A}||_1 - 1) / 2; agrees with negativity_standard for unit-trace input.
inline double negativity_trace_norm(const Matrix& rho, double tol = kDefaultTolerance) {
  const Spectrum s = hermitian_spectrum(partial_transpose_qubit(rho), tol);
  double norm1 = 0.0;
  for (double lambda : s.eigenvalues) norm1 += std::abs(lambda);
  return std::max(0.0, (norm1 - 1.0) / 2.0);
}

}  // namespace qqesd
