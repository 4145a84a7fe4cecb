#pragma once

// Test-only helpers. The oracles here are written against plain index
// arithmetic, independent of the library's channel and transpose code.

#include <complex>
#include <random>

#include "qqesd/linalg.hpp"

namespace qqesd::testing {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex{normal(rng), normal(rng)};
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  const Matrix g = random_matrix(rng, n, n);
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

inline Matrix random_state(std::mt19937_64& rng, std::size_t n) {
  const Matrix g = random_matrix(rng, n, n);
  Matrix rho(n, n);
  double tr = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += g(i, k) * std::conj(g(j, k));
      rho(i, j) = s;
    }
  for (std::size_t i = 0; i < n; ++i) tr += rho(i, i).real();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rho(i, j) /= tr;
  // exact Hermitian symmetry
  for (std::size_t i = 0; i < n; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

// rho_B = tr_A rho on the 2x3 composite, index 3a + b.
inline Matrix reduce_to_qutrit(const Matrix& rho) {
  Matrix out(3, 3);
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c) out(b, c) = rho(b, c) + rho(3 + b, 3 + c);
  return out;
}

// rho_A = tr_B rho.
inline Matrix reduce_to_qubit(const Matrix& rho) {
  Matrix out(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int b = 0; b < 3; ++b) out(a, c) += rho(3 * a + b, 3 * c + b);
  return out;
}

// Eigenvalues of a real symmetric 2x2 block [[a, b], [b, d]].
inline std::pair<double, double> block_eigenvalues(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double r = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
  return {mean - r, mean + r};
}

}  // namespace qqesd::testing
