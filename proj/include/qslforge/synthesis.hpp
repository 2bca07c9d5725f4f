#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qslforge/arc.hpp"
#include "qslforge/gate.hpp"

namespace qslforge {

struct SynthesisResult {
  HamiltonianSchedule schedule;
  /// hbar L[G] / 2, the phase-free minimum.
  double min_cost = 0.0;
  EigenphaseArc arc;
  double centering_phase = 0.0;
  bool exact_phase = false;
};

/// hbar L[G] / 2
double min_cost(const UnitaryGate& g, double hbar = 1.0);

struct ProtocolOptions {
  std::optional<ShapeFunction> shape;
  /// Build H from the principal phases of g itself so that U(tau) = g
  /// exactly. Otherwise g is first phase-centered and U(tau) = e^{i phi} g.
  bool exact_phase = false;
  double hbar = 1.0;
};

/// Constant Hamiltonian H = i hbar ln(G) / tau, optionally reshaped in time
/// as f_j H over M equal segments. All segments commute, so the product of
/// segment propagators equals the constant-protocol gate.
SynthesisResult optimal_protocol(const UnitaryGate& g, double tau, const ProtocolOptions& options = {});

struct ShapeCheck {
  std::string shape;
  int segments = 0;
  double fidelity = 0.0;
  double cost = 0.0;
  double reference_cost = 0.0;
  bool ok = false;
};

/// Synthesizes the reshaped protocol for every shape and compares fidelity
/// (>= 1 - 1e-8) and cost (equal to the constant protocol's within 1e-9).
std::vector<ShapeCheck> shaped_family_cost_check(const UnitaryGate& g, double tau,
                                                 const std::vector<ShapeFunction>& shapes,
                                                 double hbar = 1.0);

}  // namespace qslforge
