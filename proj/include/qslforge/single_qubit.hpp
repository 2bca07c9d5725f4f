#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qslforge/gate.hpp"

namespace qslforge {

/// h_j = u0_j I + u_j . sigma for every segment of a qubit schedule.
struct PauliDecomposition {
  std::vector<double> u0;
  std::vector<std::array<double, 3>> u;
};

/// The Pauli matrices sigma_x, sigma_y, sigma_z (index 0, 1, 2).
const Matrix& pauli(int k);
/// u0 I + u . sigma
Matrix pauli_matrix(double u0, const std::array<double, 3>& u);

PauliDecomposition pauli_decompose(const HamiltonianSchedule& schedule);

/// Axis and angle of the Bloch rotation realized by a 2x2 gate, read off its
/// SU(2) representative: alpha = 2 arccos(Re a), n = -(Im b, Re b, Im a) /
/// sin(alpha/2). alpha is evaluated with atan2 so small angles keep full
/// precision. alpha = 0 yields the z axis, flagged as conventional.
RotationParams rotation_params(const UnitaryGate& g);

/// R(n, alpha) = cos(alpha/2) I - i sin(alpha/2) n . sigma
Matrix rotation_matrix(const RotationParams& r);

/// hbar * alpha / 2
double min_cost_single(const UnitaryGate& g, double hbar = 1.0);

/// alpha / 2, the largest Bures angle any pure state travels under g.
double worst_case_angle(const UnitaryGate& g);

/// Rotation about n at constant angular speed alpha / tau:
/// h = (hbar alpha / 2 tau) n . sigma, one segment. With a shape, M
/// segments of length tau / M carrying f_j times that Hamiltonian.
HamiltonianSchedule optimal_qubit_protocol(const UnitaryGate& g, double tau,
                                           const std::optional<ShapeFunction>& shape = std::nullopt,
                                           double hbar = 1.0);

/// (hbar/2) int |omega| dt = sum_j dt_j |u_j|; the identity part is ignored.
double omega_cost(const HamiltonianSchedule& schedule);

/// Total Bloch rotation angle int |omega| dt = (2/hbar) sum_j dt_j |u_j|.
double rotation_path_length(const HamiltonianSchedule& schedule);

struct StrippedSchedule {
  HamiltonianSchedule schedule;
  /// -(1/hbar) int u0 dt, the global phase the identity part contributed.
  double accumulated_phase = 0.0;
};

StrippedSchedule strip_identity_component(const HamiltonianSchedule& schedule);

}  // namespace qslforge
