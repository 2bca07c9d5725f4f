#pragma once

#include <span>

#include "qslforge/gate.hpp"
#include "qslforge/types.hpp"

namespace qslforge {

/// Shortest arc of the unit circle containing a set of phases. The arc runs
/// counterclockwise from `start` to `start + length`; multiplying the
/// underlying operator by e^{i centering_phase} centers the arc on phase 0.
struct EigenphaseArc {
  double length = 0.0;
  double start = 0.0;
  double centering_phase = 0.0;
};

/// Phases closer together than this are treated as a single point (L = 0).
inline constexpr double kCoincidentPhaseTol = 1e-12;

/// L = 2 pi minus the largest circular gap between sorted phases. When
/// several gaps tie for largest (within 1e-12), the wrap-around gap is
/// preferred, then the gap starting at the smallest phase. Throws EmptyInput.
EigenphaseArc shortest_covering_arc(std::span<const double> phases);

/// Each phase shifted by the centering phase and mapped into [-L/2, L/2].
RealVector centered_phases(std::span<const double> phases, const EigenphaseArc& arc);

/// L[g]: shortest covering arc of the eigenvalues of g.
double arc_length(const UnitaryGate& g);

struct CenteredGate {
  UnitaryGate gate;
  double centering_phase = 0.0;
  EigenphaseArc arc;
  /// Eigenphases of the input gate, ascending.
  RealVector phases;
};

/// e^{i phi} g with phi chosen so the eigenphases of the result span
/// [-L/2, L/2].
CenteredGate phase_center(const UnitaryGate& g);

}  // namespace qslforge
