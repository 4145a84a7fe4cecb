#pragma once

// Sign-change scanning and bisection on scalar functions of one parameter.

#include <cmath>
#include <cstddef>
#include <vector>

#include "qqesd/errors.hpp"

namespace qqesd {

struct BisectionResult {
  double root = 0.0;
  // Final bracket; f(lo) and f(hi) have opposite signs unless one is exactly zero.
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

namespace detail {
inline constexpr int kMaxBisectionSteps = 200;

inline int sign(double v) { return (v > 0.0) - (v < 0.0); }
}  // namespace detail

// Requires sign(f(lo)) != sign(f(hi)); stops once hi - lo <= tol and returns the midpoint.
template <class F>
BisectionResult bisect(F&& f, double lo, double hi, double tol, double f_lo, double f_hi) {
  if (detail::sign(f_lo) == detail::sign(f_hi) && f_lo != 0.0) {
    throw DomainError("bisect: endpoints do not bracket a root");
  }
  if (f_lo == 0.0) return {lo, lo, lo, f_lo, f_lo};
  if (f_hi == 0.0) return {hi, hi, hi, f_hi, f_hi};
  for (int step = 0; step < detail::kMaxBisectionSteps && hi - lo > tol; ++step) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, mid, mid, f_mid, f_mid};
    if (detail::sign(f_mid) == detail::sign(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  return {0.5 * (lo + hi), lo, hi, f_lo, f_hi};
}

template <class F>
BisectionResult bisect(F&& f, double lo, double hi, double tol) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  return bisect(f, lo, hi, tol, f_lo, f_hi);
}

// All roots of f on [lo, hi] found by sampling `intervals` equal steps and
// bisecting each sign change. Samples with |f| <= zero_floor count as zero:
// an isolated zero sample is refined between its neighbours (or reported as
// is when f only touches zero there); runs of consecutive zero samples mean f
// vanishes on a whole interval and are not reported as roots.
template <class F>
std::vector<double> scan_roots(F&& f, double lo, double hi, std::size_t intervals, double tol,
                               double zero_floor = 1e-13) {
  if (intervals < 1 || !(hi > lo)) throw DomainError("scan_roots: empty scan range");
  std::vector<double> xs(intervals + 1);
  std::vector<double> fs(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    xs[i] = i == intervals ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(intervals);
    fs[i] = f(xs[i]);
  }
  auto is_zero = [&](std::size_t i) { return std::abs(fs[i]) <= zero_floor; };

  std::vector<double> roots;
  for (std::size_t i = 0; i <= intervals; ++i) {
    if (is_zero(i)) {
      const bool left_zero = i > 0 && is_zero(i - 1);
      const bool right_zero = i < intervals && is_zero(i + 1);
      if (left_zero || right_zero) continue;
      if (i > 0 && i < intervals && detail::sign(fs[i - 1]) != detail::sign(fs[i + 1])) {
        roots.push_back(bisect(f, xs[i - 1], xs[i + 1], tol, fs[i - 1], fs[i + 1]).root);
      } else {
        roots.push_back(xs[i]);
      }
      continue;
    }
    if (i < intervals && !is_zero(i + 1) && detail::sign(fs[i]) != detail::sign(fs[i + 1])) {
      roots.push_back(bisect(f, xs[i], xs[i + 1], tol, fs[i], fs[i + 1]).root);
    }
  }
  return roots;
}

}  // namespace qqesd
