#include "qslforge/synthesis.hpp"

#include <cmath>

#include "qslforge/errors.hpp"
#include "qslforge/evolution.hpp"
#include "qslforge/spectral.hpp"

namespace qslforge {

double min_cost(const UnitaryGate& g, double hbar) { return hbar * arc_length(g) / 2.0; }

SynthesisResult optimal_protocol(const UnitaryGate& g, double tau, const ProtocolOptions& options) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw BadParams("tau must be positive");
  const UnitarySpectrum spectrum = unitary_spectrum(g);
  const std::span<const double> phases(spectrum.eigenphases.data(),
                                       static_cast<std::size_t>(spectrum.eigenphases.size()));
  const EigenphaseArc arc = shortest_covering_arc(phases);

  const RealVector used = options.exact_phase ? spectrum.eigenphases : centered_phases(phases, arc);
  Matrix h = reconstruct(spectrum.eigenvectors, (-options.hbar / tau) * used);
  h = 0.5 * (h + h.adjoint());

  std::vector<Segment> segments;
  if (options.shape) {
    const double dt = tau / options.shape->segments();
    for (double f : options.shape->samples()) segments.push_back({dt, f * h});
  } else {
    segments.push_back({tau, h});
  }

  return SynthesisResult{HamiltonianSchedule(std::move(segments), options.hbar),
                         options.hbar * arc.length / 2.0, arc,
                         options.exact_phase ? 0.0 : arc.centering_phase, options.exact_phase};
}

std::vector<ShapeCheck> shaped_family_cost_check(const UnitaryGate& g, double tau,
                                                 const std::vector<ShapeFunction>& shapes,
                                                 double hbar) {
  ProtocolOptions constant;
  constant.hbar = hbar;
  const double reference = cost(optimal_protocol(g, tau, constant).schedule);

  std::vector<ShapeCheck> out;
  for (const ShapeFunction& shape : shapes) {
    ProtocolOptions shaped = constant;
    shaped.shape = shape;
    const SynthesisResult r = optimal_protocol(g, tau, shaped);
    ShapeCheck c;
    c.shape = shape.name();
    c.segments = shape.segments();
    c.fidelity = fidelity_up_to_phase(propagate(r.schedule).u_final, g);
    c.cost = cost(r.schedule);
    c.reference_cost = reference;
    c.ok = c.fidelity >= 1.0 - 1e-8 && std::abs(c.cost - reference) <= 1e-9;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qslforge
