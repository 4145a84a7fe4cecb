#pragma once

// Literal closed-form partial-transpose eigenvalues and max{0, |.|} negativities
// for each noise coupling. Every expression keeps the grouping in which it was
// published; none are simplified, and none are corrected where they disagree
// with direct Kraus evolution (see discrepancy.hpp for the comparison).

#include <array>
#include <cmath>
#include <numeric>

#include "qqesd/channels.hpp"
#include "qqesd/errors.hpp"
#include "qqesd/states.hpp"

namespace qqesd {

struct ScenarioEigenvalues {
  // lambda_1, lambda_2 (equal), lambda_3, lambda_4 (equal), lambda_5, lambda_6.
  std::array<double, 6> lambda{};
  NoiseScenario scenario;
  double x = 0.0;

  double sum() const { return std::accumulate(lambda.begin(), lambda.end(), 0.0); }
  double lambda5() const { return lambda[4]; }
  double lambda6() const { return lambda[5]; }
};

// value = max{0, |inner|}; inner is the signed expression inside the bars.
struct PaperNegativity {
  double value = 0.0;
  double inner = 0.0;
};

enum class CollectiveVariant { Printed, Reconstructed };

inline PaperNegativity paper_negativity_from_inner(double inner) { return {std::max(0.0, std::abs(inner)), inner}; }

namespace detail {

inline ScenarioEigenvalues make_eigenvalues(double l12, double l34, double l5, double l6, NoiseScenario s, double x) {
  return {{l12, l12, l34, l34, l5, l6}, s, x};
}

}  // namespace detail

// Only the qubit couples to its environment.
inline ScenarioEigenvalues eigenvalues_qubit_only(double p1, FamilyParam fx) {
  detail::require_probability(p1, "p1");
  const double x = fx.value();
  const double l12 = 1.0 / 4.0 - 3.0 / 32.0 * p1;
  const double l34 = 1.0 / 8.0 + 3.0 / 64.0 * p1;
  const double l5 = 1.0 / 8.0 + 3.0 / 64.0 * (1.0 - 24.0 * x) * p1 + x;
  const double l6 = 1.0 / 8.0 + 3.0 / 64.0 * (1.0 + 24.0 * x) * p1 - x;
  return detail::make_eigenvalues(l12, l34, l5, l6, NoiseScenario::qubit_local(p1), x);
}

inline PaperNegativity negativity_paper_qubit(double p1, FamilyParam fx) {
  detail::require_probability(p1, "p1");
  const double x = fx.value();
  return paper_negativity_from_inner(1.0 / 8.0 + 3.0 / 64.0 * (1.0 + 24.0 * x) * p1 - x);
}

// Only the qutrit couples to its environment. lambda_{1,2} and lambda_{3,4}
// carry p1 terms as published; with p1 != 0 the six values do not sum to one.
inline ScenarioEigenvalues eigenvalues_qutrit_only(double p1, double p2, FamilyParam fx) {
  detail::require_probability(p1, "p1");
  detail::require_probability(p2, "p2");
  const double x = fx.value();
  const double l12 = 1.0 / 4.0 - 3.0 / 32.0 * p1 - 1.0 / 12.0 * p2 + 3.0 / 32.0 * p1 * p2;
  const double l34 = 1.0 / 8.0 + 3.0 / 64.0 * p1;
  const double l5 = 1.0 / 8.0 + 1.0 / 12.0 * (1.0 - 16.0 * x) * p2 + x;
  const double l6 = 1.0 / 8.0 + 1.0 / 12.0 * (1.0 + 16.0 * x) * p2 - x;
  // The scenario tag records p2 only; p1 is a formula argument, not a coupling.
  return detail::make_eigenvalues(l12, l34, l5, l6, NoiseScenario::qutrit_local(p2), x);
}

inline PaperNegativity negativity_paper_qutrit(double p2, FamilyParam fx) {
  detail::require_probability(p2, "p2");
  const double x = fx.value();
  return paper_negativity_from_inner(1.0 / 8.0 + 1.0 / 12.0 * (1.0 + 16.0 * x) * p2 - x);
}

// Independent qubit and qutrit environments.
inline ScenarioEigenvalues eigenvalues_multilocal(double p1, double p2, FamilyParam fx) {
  detail::require_probability(p1, "p1");
  detail::require_probability(p2, "p2");
  const double x = fx.value();
  const double l12 = 1.0 / 12.0 * (3.0 - p2);
  const double l34 = 1.0 / 8.0;
  const double l5 = 1.0 / 8.0 + 3.0 / 64.0 * p1 + 1.0 / 12.0 * p2 - 3.0 / 32.0 * (1.0 - 16.0 * x) * p1 * p2 -
                    (9.0 / 8.0 * p1 + 4.0 / 3.0 * p2 - 1.0) * x;
  const double l6 = 1.0 / 8.0 + 3.0 / 64.0 * p1 + 1.0 / 12.0 * p2 - 3.0 / 32.0 * (1.0 + 16.0 * x) * p1 * p2 +
                    (9.0 / 8.0 * p1 + 4.0 / 3.0 * p2 - 1.0) * x;
  return detail::make_eigenvalues(l12, l34, l5, l6, NoiseScenario::multilocal(p1, p2), x);
}

inline PaperNegativity negativity_paper_multilocal(double p1, double p2, FamilyParam x) {
  return paper_negativity_from_inner(eigenvalues_multilocal(p1, p2, x).lambda6());
}

// Printed: the factors multiply as typeset,
//   1/8 + (1/32)(25/6 - 3p) p (59/24 - 3p/2) p x - x.
// Reconstructed: lambda_6 of the multilocal form at p1 = p2 = p,
//   1/8 + (1/32)(25/6 - 3p) p + (59/24 - 3p/2) p x - x.
inline PaperNegativity negativity_paper_collective(double p, FamilyParam fx,
                                                   CollectiveVariant variant = CollectiveVariant::Reconstructed) {
  detail::require_probability(p, "p");
  const double x = fx.value();
  const double inner = variant == CollectiveVariant::Printed
                           ? 1.0 / 8.0 + 1.0 / 32.0 * (25.0 / 6.0 - 3.0 * p) * p * (59.0 / 24.0 - 3.0 / 2.0 * p) * p * x - x
                           : 1.0 / 8.0 + 1.0 / 32.0 * (25.0 / 6.0 - 3.0 * p) * p + (59.0 / 24.0 - 3.0 / 2.0 * p) * p * x - x;
  return paper_negativity_from_inner(inner);
}

// Global coupling with p1 = p2 = 1/2: the one eigenvalue that can turn negative.
inline double lambda6_global_half(double p, FamilyParam fx) {
  detail::require_probability(p, "p");
  const double x = fx.value();
  return (96.0 * (8.0 - 7.0 * x) - 63.0 * p * p * (1.0 + 16.0 * x) + 28.0 * p * (2.0 + 59.0 * x)) / 4608.0;
}

// Global coupling with p1 = p2 = 1/2. Not equal to |lambda6_global_half| (the
// two disagree already at p = 0).
inline PaperNegativity negativity_paper_global_half(double p, FamilyParam fx) {
  detail::require_probability(p, "p");
  const double x = fx.value();
  return paper_negativity_from_inner(
      (2184.0 - 4800.0 * x - 450.0 * p * p * (1.0 + 16.0 * x) + 5.0 * p * (107.0 + 2360.0 * x)) / 13824.0);
}

// Roots of the x-coefficient of the reconstructed collective expression,
// (59/24) p - (3/2) p^2 - 1 = 0, i.e. 36 p^2 - 59 p + 24 = 0.
inline std::array<double, 2> collective_critical_roots() {
  constexpr double a = 36.0, b = -59.0, c = 24.0;
  const double disc = std::sqrt(b * b - 4.0 * a * c);
  return {(-b - disc) / (2.0 * a), (-b + disc) / (2.0 * a)};
}

}  // namespace qqesd
