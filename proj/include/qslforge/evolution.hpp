#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qslforge/gate.hpp"
#include "qslforge/types.hpp"

namespace qslforge {

struct Propagation {
  Matrix u_final;
  std::optional<StateVector> psi_final;
};

/// U = U_M ... U_2 U_1 with U_j = e^{-i h_j dt_j / hbar}. Exact per segment.
/// Throws DimensionMismatch or NormError for a bad initial state.
Propagation propagate(const HamiltonianSchedule& schedule,
                      const std::optional<StateVector>& psi0 = std::nullopt);

/// U(t_j) at every segment boundary, starting with the identity at t = 0.
std::vector<Matrix> propagate_path(const HamiltonianSchedule& schedule);

/// |tr(G^dag U)| / d. Equal to 1 exactly when U = e^{i phi} G.
double fidelity_up_to_phase(const Matrix& u, const UnitaryGate& g);
/// Re tr(G^dag U) / d. Equal to 1 only when U = G including the phase.
double exact_fidelity(const Matrix& u, const UnitaryGate& g);

/// A = sum_j dt_j (E_max(j) - E_min(j)).
double phase_volume(const HamiltonianSchedule& schedule);

/// Matrix norm applied to each segment: Schatten-p, p = infinity is the
/// operator norm.
struct MatrixNorm {
  double p = kInf;
  static MatrixNorm op() { return {kInf}; }
  static MatrixNorm schatten(double p) { return {p}; }
};

/// Norm in time: p = 1 is the plain time integral, p > 1 the Lebesgue
/// p-norm (sum_j dt_j ||h_j||^p)^{1/p}, p = infinity the maximum.
struct TimeNorm {
  double p = 1.0;
  static TimeNorm l1() { return {1.0}; }
  static TimeNorm lebesgue(double p) { return {p}; }
};

/// Energetic cost functional. Throws BadP when either p is below 1.
double cost(const HamiltonianSchedule& schedule, MatrixNorm matrix_norm = MatrixNorm::op(),
            TimeNorm time_norm = TimeNorm::l1());

/// Per-segment norm values ||h_j|| under the given matrix norm.
std::vector<double> segment_norms(const HamiltonianSchedule& schedule, MatrixNorm matrix_norm);

/// Costs of a schedule in units of hbar * radians.
struct CostReport {
  double tau = 0.0;
  double c_opnorm = 0.0;
  double phase_volume = 0.0;
  std::map<double, double> c_schatten;
  std::map<double, double> c_lebesgue;
};

/// C_opnorm, A, and the Schatten / Lebesgue costs for every p in `p_list`.
/// p = infinity and p = 1 are always included.
CostReport cost_report(const HamiltonianSchedule& schedule, std::span<const double> p_list = {});

/// Shifts every segment by -E_min(j) so that its ground energy is 0. This
/// only changes the global phase of the evolution.
HamiltonianSchedule shift_ground(const HamiltonianSchedule& schedule);

/// Instantaneous sorted eigenvalues on a grid. Each segment contributes
/// samples_per_segment + 1 equally spaced rows including both endpoints, so
/// boundaries appear twice (once per side) and trapezoid integration of the
/// spread reproduces the phase volume exactly.
struct Trajectory {
  std::vector<double> t;
  std::vector<RealVector> energies;
  /// Trapezoid integral of E_max - E_min over the grid.
  double integrated_spread() const;
};

Trajectory eigenvalue_trajectories(const HamiltonianSchedule& schedule, int samples_per_segment);

}  // namespace qslforge
