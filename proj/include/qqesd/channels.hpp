#pragma once

// Depolarizing Kraus sets for the qubit, the qutrit, their lifts to the
// composite 2x3 space, the collective product set, and their composition.

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qqesd/errors.hpp"
#include "qqesd/linalg.hpp"
#include "qqesd/states.hpp"

namespace qqesd {

struct KrausSet {
  std::vector<Matrix> operators;
  double noise_param = 0.0;
  std::string label;

  std::size_t dimension() const { return operators.front().rows(); }
};

// max |sum_i E_i^dagger E_i - I|.
inline double completeness_error(const KrausSet& set) {
  const std::size_t d = set.dimension();
  Matrix sum(d, d);
  for (const Matrix& e : set.operators) sum = add(sum, matmul(adjoint(e), e));
  return max_abs_diff(sum, Matrix::identity(d));
}

// sigma_0 .. sigma_3.
inline Matrix pauli(int index) {
  const Complex i{0.0, 1.0};
  switch (index) {
    case 0: return Matrix::identity(2);
    case 1: return Matrix(2, 2, {0.0, 1.0, 1.0, 0.0});
    case 2: return Matrix(2, 2, {0.0, -i, i, 0.0});
    case 3: return Matrix(2, 2, {1.0, 0.0, 0.0, -1.0});
    default: throw DimensionError("pauli: index must be 0..3");
  }
}

// Shift Y (Y|0> = |2>, Y|1> = |0>, Y|2> = |1>) and clock Z = diag(1, w, w^2).
inline std::pair<Matrix, Matrix> weyl_generators() {
  Matrix y(3, 3, {0.0, 1.0, 0.0,
                  0.0, 0.0, 1.0,
                  1.0, 0.0, 0.0});
  const Complex w = omega();
  Matrix z = Matrix::diagonal({1.0, w, w * w});
  return {std::move(y), std::move(z)};
}

inline KrausSet qubit_depolarizing_kraus(double p) {
  detail::require_probability(p, "qubit depolarizing p");
  const double a = std::sqrt(1.0 - p);
  const double b = std::sqrt(p / 3.0);
  KrausSet set{{}, p, "qubit-depolarizing"};
  set.operators.push_back(scale(a, pauli(0)));
  for (int k = 1; k <= 3; ++k) set.operators.push_back(scale(b, pauli(k)));
  return set;
}

// sqrt(1-p) I together with sqrt(p/8) times Y, Z, Y^2, YZ, Y^2Z, YZ^2, Y^2Z^2, Z^2 (in that order).
inline KrausSet qutrit_depolarizing_kraus(double p) {
  detail::require_probability(p, "qutrit depolarizing p");
  const auto [y, z] = weyl_generators();
  const Matrix y2 = y * y;
  const Matrix z2 = z * z;
  const std::array<Matrix, 8> weyl{y, z, y2, y * z, y2 * z, y * z2, y2 * z2, z2};

  const double b = std::sqrt(p / 8.0);
  KrausSet set{{}, p, "qutrit-depolarizing"};
  set.operators.push_back(scale(std::sqrt(1.0 - p), Matrix::identity(3)));
  for (const Matrix& u : weyl) set.operators.push_back(scale(b, u));
  return set;
}

enum class Subsystem { Qubit, Qutrit };

// Qubit side: E -> E (x) I_3. Qutrit side: E -> sigma_0 (x) E.
inline KrausSet lift_to_composite(const KrausSet& set, Subsystem side) {
  const std::size_t expected = side == Subsystem::Qubit ? kQubitDim : kQutritDim;
  if (set.operators.empty() || set.dimension() != expected) {
    throw DimensionError("lift_to_composite: Kraus set dimension does not match the subsystem");
  }
  KrausSet lifted{{}, set.noise_param, set.label + (side == Subsystem::Qubit ? "(x)I3" : "/I2(x)")};
  lifted.operators.reserve(set.operators.size());
  for (const Matrix& e : set.operators) {
    lifted.operators.push_back(side == Subsystem::Qubit ? kron(e, Matrix::identity(kQutritDim))
                                                        : kron(pauli(0), e));
  }
  return lifted;
}

// All 36 products A_m (x) B_n with a shared parameter p.
inline KrausSet collective_kraus(double p) {
  const KrausSet qubit = qubit_depolarizing_kraus(p);
  const KrausSet qutrit = qutrit_depolarizing_kraus(p);
  KrausSet set{{}, p, "collective-depolarizing"};
  set.operators.reserve(qubit.operators.size() * qutrit.operators.size());
  for (const Matrix& a : qubit.operators)
    for (const Matrix& b : qutrit.operators) set.operators.push_back(kron(a, b));
  return set;
}

namespace detail {
inline constexpr double kDensityTolerance = 1e-10;
}

// rho' = sum_i E_i rho E_i^dagger. Input must be a density matrix within 1e-10.
inline Matrix apply_channel(const Matrix& rho, const KrausSet& set) {
  if (set.operators.empty()) throw DimensionError("apply_channel: empty Kraus set");
  if (!rho.is_square() || rho.rows() != set.dimension()) {
    throw DimensionError("apply_channel: state is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                         ", channel acts on dimension " + std::to_string(set.dimension()));
  }
  if (!validate_density(rho, detail::kDensityTolerance)) {
    throw NotDensityError("apply_channel: input is not a density matrix");
  }
  Matrix out(rho.rows(), rho.cols());
  for (const Matrix& e : set.operators) out = add(out, matmul(matmul(e, rho), adjoint(e)));
  return out;
}

enum class ScenarioKind { QubitLocal, QutritLocal, Multilocal, Collective, Global };

inline std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::QubitLocal: return "qubit";
    case ScenarioKind::QutritLocal: return "qutrit";
    case ScenarioKind::Multilocal: return "multilocal";
    case ScenarioKind::Collective: return "collective";
    case ScenarioKind::Global: return "global";
  }
  return "unknown";
}

// Which environment couplings are active. p1: qubit-local, p2: qutrit-local,
// p: collective. Parameters that the kind does not use must be zero.
class NoiseScenario {
 public:
  NoiseScenario(ScenarioKind kind, double p1, double p2, double p) : kind_(kind), p1_(p1), p2_(p2), p_(p) {
    detail::require_probability(p1, "p1");
    detail::require_probability(p2, "p2");
    detail::require_probability(p, "p");
    const bool uses_p1 = kind == ScenarioKind::QubitLocal || kind == ScenarioKind::Multilocal || kind == ScenarioKind::Global;
    const bool uses_p2 = kind == ScenarioKind::QutritLocal || kind == ScenarioKind::Multilocal || kind == ScenarioKind::Global;
    const bool uses_p = kind == ScenarioKind::Collective || kind == ScenarioKind::Global;
    if ((!uses_p1 && p1 != 0.0) || (!uses_p2 && p2 != 0.0) || (!uses_p && p != 0.0)) {
      throw DomainError("scenario '" + std::string(to_string(kind)) + "' sets a parameter it does not use");
    }
  }

  static NoiseScenario qubit_local(double p1) { return {ScenarioKind::QubitLocal, p1, 0.0, 0.0}; }
  static NoiseScenario qutrit_local(double p2) { return {ScenarioKind::QutritLocal, 0.0, p2, 0.0}; }
  static NoiseScenario multilocal(double p1, double p2) { return {ScenarioKind::Multilocal, p1, p2, 0.0}; }
  static NoiseScenario collective(double p) { return {ScenarioKind::Collective, 0.0, 0.0, p}; }
  static NoiseScenario global(double p1, double p2, double p) { return {ScenarioKind::Global, p1, p2, p}; }

  ScenarioKind kind() const { return kind_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }
  double p() const { return p_; }

 private:
  ScenarioKind kind_;
  double p1_;
  double p2_;
  double p_;
};

// Qubit stage (p1), then qutrit stage (p2), then collective stage (p);
// stages with a zero parameter are skipped.
inline Matrix evolve(const NoiseScenario& scenario, const Matrix& rho) {
  if (rho.rows() != kCompositeDim || rho.cols() != kCompositeDim) {
    throw DimensionError("evolve: state must be 6x6");
  }
  Matrix out = rho;
  if (scenario.p1() != 0.0) {
    out = apply_channel(out, lift_to_composite(qubit_depolarizing_kraus(scenario.p1()), Subsystem::Qubit));
  }
  if (scenario.p2() != 0.0) {
    out = apply_channel(out, lift_to_composite(qutrit_depolarizing_kraus(scenario.p2()), Subsystem::Qutrit));
  }
  if (scenario.p() != 0.0) out = apply_channel(out, collective_kraus(scenario.p()));
  return out;
}

namespace detail {

// tr_A: reduced qutrit state.
inline Matrix partial_trace_qubit(const Matrix& rho) {
  Matrix out(kQutritDim, kQutritDim);
  for (std::size_t b = 0; b < kQutritDim; ++b)
    for (std::size_t bp = 0; bp < kQutritDim; ++bp)
      for (std::size_t a = 0; a < kQubitDim; ++a) out(b, bp) += rho(basis_index(a, b), basis_index(a, bp));
  return out;
}

// tr_B: reduced qubit state.
inline Matrix partial_trace_qutrit(const Matrix& rho) {
  Matrix out(kQubitDim, kQubitDim);
  for (std::size_t a = 0; a < kQubitDim; ++a)
    for (std::size_t ap = 0; ap < kQubitDim; ++ap)
      for (std::size_t b = 0; b < kQutritDim; ++b) out(a, ap) += rho(basis_index(a, b), basis_index(ap, b));
  return out;
}

// Closed forms of the lifted local channels:
//   qubit:  (1-p) rho + (p/3) (2 I_2 (x) rho_B - rho)
//   qutrit: (1-p) rho + (p/8) (3 rho_A (x) I_3 - rho)
inline Matrix qubit_channel_identity(const Matrix& rho, double p) {
  const Matrix mixed = kron(Matrix::identity(kQubitDim), partial_trace_qubit(rho));
  return add(scale(1.0 - p, rho), scale(p / 3.0, subtract(scale(2.0, mixed), rho)));
}

inline Matrix qutrit_channel_identity(const Matrix& rho, double p) {
  const Matrix mixed = kron(partial_trace_qutrit(rho), Matrix::identity(kQutritDim));
  return add(scale(1.0 - p, rho), scale(p / 8.0, subtract(scale(3.0, mixed), rho)));
}

}  // namespace detail
}  // namespace qqesd
