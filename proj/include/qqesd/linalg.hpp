#pragma once

// Dense complex matrices sized for qubit (2), qutrit (3) and composite (6)
// operators, plus a cyclic Jacobi eigensolver for Hermitian input.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qqesd/errors.hpp"

namespace qqesd {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-12;

// Primitive cube root of unity e^{2 pi i / 3}.
inline Complex omega() {
  constexpr double angle = 2.0 * std::numbers::pi / 3.0;
  return {std::cos(angle), std::sin(angle)};
}

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("Matrix: dimensions must be positive");
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionError("Matrix: dimensions must be positive");
    if (data_.size() != rows * cols) {
      throw DimensionError("Matrix: expected " + std::to_string(rows * cols) + " entries, got " +
                           std::to_string(data_.size()));
    }
    for (const Complex& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("Matrix: non-finite entry");
      }
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::initializer_list<Complex> values) {
    Matrix m(values.size(), values.size());
    std::size_t i = 0;
    for (const Complex& v : values) {
      m(i, i) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

// Entry ((i*b.rows + k), (j*b.cols + l)) = a(i, j) * b(k, l).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

inline Matrix adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

inline Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("subtract: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

inline Matrix scale(Complex c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
  return out;
}

inline Complex trace(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("trace: matrix is not square");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return subtract(a, b); }
inline Matrix operator*(Complex c, const Matrix& a) { return scale(c, a); }

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return max_abs(subtract(a, b)); }

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // max_i ||A v_i - lambda_i v_i||_inf

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  double sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }
};

namespace detail {
inline constexpr int kMaxJacobiSweeps = 100;
}

// Cyclic complex Jacobi sweeps. Converged once the off-diagonal Frobenius mass
// drops to tol * max(1, ||a||_F). Ties keep the order of the diagonal.
inline Spectrum hermitian_spectrum(const Matrix& a, double tol = kDefaultTolerance) {
  if (!a.is_square()) throw DimensionError("hermitian_spectrum: matrix is not square");
  const std::size_t n = a.rows();
  const double asymmetry = max_abs_diff(a, adjoint(a));
  if (asymmetry > tol) {
    throw NotHermitianError("hermitian_spectrum: ||A - A^dagger||_max = " + std::to_string(asymmetry));
  }

  Matrix h = scale(0.5, add(a, adjoint(a)));
  Matrix v = Matrix::identity(n);
  const double threshold = tol * std::max(1.0, frobenius_norm(h));

  auto off_diagonal_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < detail::kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_mass() <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = h(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Rotate the phase of a_pq onto the real axis, then apply a real
        // Jacobi rotation; U = diag(.., conj(phase) at q, ..) * R.
        const Complex phase = apq / mag;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex cphase = std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex hkp = h(k, p);
          const Complex hkq = h(k, q);
          h(k, p) = c * hkp - s * cphase * hkq;
          h(k, q) = s * hkp + c * cphase * hkq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * cphase * vkq;
          v(k, q) = s * vkp + c * cphase * vkq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex hpj = h(p, j);
          const Complex hqj = h(q, j);
          h(p, j) = c * hpj - s * phase * hqj;
          h(q, j) = s * hpj + c * phase * hqj;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
      }
    }
  }
  if (!converged && off_diagonal_mass() > threshold) {
    throw ConvergenceError("hermitian_spectrum: no convergence within " +
                           std::to_string(detail::kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::pair<double, std::size_t>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {h(i, i).real(), i};
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& l, const auto& r) { return l.first < r.first; });

  Spectrum out;
  out.eigenvalues.reserve(n);
  for (const auto& [lambda, col] : pairs) {
    out.eigenvalues.push_back(lambda);
    for (std::size_t i = 0; i < n; ++i) {
      Complex av{};
      for (std::size_t k = 0; k < n; ++k) av += a(i, k) * v(k, col);
      out.residual = std::max(out.residual, std::abs(av - lambda * v(i, col)));
    }
  }
  if (out.residual > tol * std::max(1.0, frobenius_norm(a))) {
    throw ConvergenceError("hermitian_spectrum: residual " + std::to_string(out.residual) + " exceeds tolerance");
  }
  return out;
}

}  // namespace qqesd
