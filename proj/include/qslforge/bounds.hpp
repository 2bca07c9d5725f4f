#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qslforge/gate.hpp"
#include "qslforge/types.hpp"

namespace qslforge {

/// One inequality lhs >= rhs evaluated on concrete data.
struct BoundReport {
  std::string bound;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = false;
  /// rhs is infinite (e.g. a stationary state can never reach angle > 0).
  bool unbounded = false;
};

inline constexpr double kBoundTol = 1e-8;

/// satisfied <=> lhs - rhs >= -1e-8 * max(1, |rhs|)
BoundReport make_report(std::string name, double lhs, double rhs);

/// A minimum evolution time.
struct SpeedLimit {
  std::string name;
  double tau_min = 0.0;
  bool unbounded = false;
  /// Report for `elapsed >= tau_min`.
  BoundReport check(double elapsed) const;
};

struct EnergyStats {
  double mean = 0.0;
  double stddev = 0.0;
  /// <E> - E_0
  double ground_gap = 0.0;
  /// E_max - E_0
  double spread = 0.0;
};

/// arccos |<psi1|psi2>|, computed as atan2(|perp|, |overlap|) to stay
/// accurate for nearly parallel states. Throws NormError / DimensionMismatch.
double bures_angle(const StateVector& psi1, const StateVector& psi2);

EnergyStats energy_stats(const Matrix& h, const StateVector& psi);

struct StateSpeedLimits {
  SpeedLimit mandelstam_tamm;   // hbar theta / dE
  SpeedLimit margolus_levitin;  // hbar theta / (<E> - E_0)
  SpeedLimit unified;           // max of both
};

/// The ML branch is linear in theta. It is a valid lower bound at theta = pi/2
/// but can exceed the true evolution time for smaller angles; the MT branch
/// holds for every angle.
StateSpeedLimits tau_qsl_state(const Matrix& h, const StateVector& psi, double theta,
                               double hbar = 1.0);

struct StateIndependentLimits {
  SpeedLimit mandelstam_tamm;   // 2 hbar theta / (E_max - E_0)
  SpeedLimit margolus_levitin;  // hbar theta / (E_max - E_0), always weaker
};

StateIndependentLimits tau_qsl_state_independent(const Matrix& h, double theta, double hbar = 1.0);

/// hbar theta / ||H||_p
SpeedLimit tau_qsl_schatten(const Matrix& h, double theta, double p, double hbar = 1.0);

/// A >= 2 hbar B(psi0, psi(tau))
BoundReport check_area_bound(const HamiltonianSchedule& schedule, const StateVector& psi0);

/// int ||H||_p dt >= hbar B(psi0, psi(tau))
BoundReport check_cost_bound(const HamiltonianSchedule& schedule, const StateVector& psi0, double p);

struct GateBoundOptions {
  /// Minimum fidelity for the schedule to count as implementing the gate.
  double fidelity_threshold = 1.0 - 1e-8;
  /// Require U(tau) = G including the phase and add the Schatten-p bounds.
  bool exact_phase = false;
};

/// Gate-level bounds for a schedule implementing g:
///   phase_volume_arc   A >= hbar L[G]
///   min_cost           C >= hbar L[G] / 2
///   gate_qsl_time      tau >= hbar L[G] / (2 <||H||>_t)
///   sandwich_lower     C >= A / 2
///   sandwich_upper     A >= C after shifting every segment to E_0 = 0
///   lebesgue_p=<p>     C_p >= (hbar L / 2) tau^{(1-p)/p}
///   schatten_p=<p>     int ||H||_p dt >= hbar |theta|_p  (exact phase only)
/// Throws NotAllowedProtocol when the fidelity requirement fails.
std::vector<BoundReport> check_gate_bounds(const HamiltonianSchedule& schedule,
                                           const UnitaryGate& g, std::span<const double> p_list,
                                           const GateBoundOptions& options = {});

}  // namespace qslforge
