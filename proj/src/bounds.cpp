#include "qslforge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qslforge/arc.hpp"
#include "qslforge/errors.hpp"
#include "qslforge/evolution.hpp"
#include "qslforge/io.hpp"
#include "qslforge/spectral.hpp"

namespace qslforge {

namespace {

void require_unit(const StateVector& psi, const char* what) {
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw NormError(std::string(what) + ": state is not normalized");
  }
}

// hbar theta / rate, with theta = 0 always giving 0 and a vanishing rate
// giving an unbounded limit.
SpeedLimit limit(std::string name, double hbar, double theta, double rate) {
  if (theta == 0.0) return {std::move(name), 0.0, false};
  if (!(rate > 0.0)) return {std::move(name), kInf, true};
  return {std::move(name), hbar * theta / rate, false};
}

}  // namespace

BoundReport make_report(std::string name, double lhs, double rhs) {
  BoundReport r;
  r.bound = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.unbounded = std::isinf(rhs) && rhs > 0.0;
  r.slack = lhs - rhs;
  r.satisfied = !r.unbounded && r.slack >= -kBoundTol * std::max(1.0, std::abs(rhs));
  return r;
}

BoundReport SpeedLimit::check(double elapsed) const { return make_report(name, elapsed, tau_min); }

double bures_angle(const StateVector& psi1, const StateVector& psi2) {
  if (psi1.size() != psi2.size()) throw DimensionMismatch("bures_angle: state dimensions differ");
  require_unit(psi1, "bures_angle");
  require_unit(psi2, "bures_angle");
  const cplx overlap = psi1.dot(psi2);
  const double perp = (psi2 - overlap * psi1).norm();
  return std::atan2(perp, std::abs(overlap));
}

EnergyStats energy_stats(const Matrix& h, const StateVector& psi) {
  if (psi.size() != h.rows()) throw DimensionMismatch("energy_stats: dimensions differ");
  require_unit(psi, "energy_stats");
  const RealVector e = hermitian_spectrum(h).eigenvalues;
  const StateVector hpsi = h * psi;
  EnergyStats s;
  s.mean = psi.dot(hpsi).real();
  // Variance as ||(H - <E>) psi||^2, which cannot go negative.
  s.stddev = (hpsi - s.mean * psi).norm();
  s.ground_gap = std::max(0.0, s.mean - e(0));
  s.spread = e(e.size() - 1) - e(0);
  return s;
}

StateSpeedLimits tau_qsl_state(const Matrix& h, const StateVector& psi, double theta, double hbar) {
  const EnergyStats s = energy_stats(h, psi);
  StateSpeedLimits out{limit("mandelstam_tamm", hbar, theta, s.stddev),
                       limit("margolus_levitin", hbar, theta, s.ground_gap), {}};
  const SpeedLimit& mt = out.mandelstam_tamm;
  const SpeedLimit& ml = out.margolus_levitin;
  out.unified = {"unified", std::max(mt.tau_min, ml.tau_min), mt.unbounded || ml.unbounded};
  return out;
}

StateIndependentLimits tau_qsl_state_independent(const Matrix& h, double theta, double hbar) {
  const RealVector e = hermitian_spectrum(h).eigenvalues;
  const double spread = e(e.size() - 1) - e(0);
  return {limit("state_independent_mt", hbar, 2.0 * theta, spread),
          limit("state_independent_ml", hbar, theta, spread)};
}

SpeedLimit tau_qsl_schatten(const Matrix& h, double theta, double p, double hbar) {
  return limit("schatten_p=" + p_label(p), hbar, theta, schatten_norm(h, p));
}

BoundReport check_area_bound(const HamiltonianSchedule& schedule, const StateVector& psi0) {
  const Propagation prop = propagate(schedule, psi0);
  return make_report("area", phase_volume(schedule),
                     2.0 * schedule.hbar() * bures_angle(psi0, *prop.psi_final));
}

BoundReport check_cost_bound(const HamiltonianSchedule& schedule, const StateVector& psi0,
                             double p) {
  const Propagation prop = propagate(schedule, psi0);
  return make_report("state_cost_p=" + p_label(p),
                     cost(schedule, MatrixNorm::schatten(p), TimeNorm::l1()),
                     schedule.hbar() * bures_angle(psi0, *prop.psi_final));
}

std::vector<BoundReport> check_gate_bounds(const HamiltonianSchedule& schedule,
                                           const UnitaryGate& g, std::span<const double> p_list,
                                           const GateBoundOptions& options) {
  if (schedule.dim() != g.dim()) throw DimensionMismatch("schedule and gate dimensions differ");
  const Matrix u = propagate(schedule).u_final;
  const double fidelity =
      options.exact_phase ? exact_fidelity(u, g) : fidelity_up_to_phase(u, g);
  if (fidelity < options.fidelity_threshold) {
    std::ostringstream os;
    os.precision(12);
    os << "schedule does not implement the gate" << (options.exact_phase ? " exactly" : "")
       << ": fidelity " << fidelity << " < " << options.fidelity_threshold;
    if (options.exact_phase && fidelity_up_to_phase(u, g) >= options.fidelity_threshold) {
      os << " (it matches up to a global phase; Schatten-p bounds need the exact gate,"
            " synthesize with exact phase)";
    }
    throw NotAllowedProtocol(os.str());
  }

  const double hbar = schedule.hbar();
  const double tau = schedule.total_duration();
  const UnitarySpectrum spectrum = unitary_spectrum(g);
  const double L =
      shortest_covering_arc({spectrum.eigenphases.data(),
                             static_cast<std::size_t>(spectrum.eigenphases.size())})
          .length;
  const double area = phase_volume(schedule);
  const double c = cost(schedule);

  std::vector<BoundReport> out;
  out.push_back(make_report("phase_volume_arc", area, hbar * L));
  out.push_back(make_report("min_cost", c, hbar * L / 2.0));
  out.push_back(make_report("gate_qsl_time", tau, c > 0.0 ? hbar * L * tau / (2.0 * c)
                                                          : (L > 0.0 ? kInf : 0.0)));
  out.push_back(make_report("sandwich_lower", c, area / 2.0));
  out.push_back(make_report("sandwich_upper", area, cost(shift_ground(schedule))));
  for (double p : p_list) {
    const double scale = std::isinf(p) ? 1.0 / tau : std::pow(tau, (1.0 - p) / p);
    out.push_back(make_report("lebesgue_p=" + p_label(p),
                              cost(schedule, MatrixNorm::op(), TimeNorm::lebesgue(p)),
                              hbar * L / 2.0 * scale));
  }
  if (options.exact_phase) {
    for (double p : p_list) {
      out.push_back(make_report("schatten_p=" + p_label(p),
                                cost(schedule, MatrixNorm::schatten(p), TimeNorm::l1()),
                                hbar * vector_p_norm(spectrum.eigenphases, p)));
    }
  }
  return out;
}

}  // namespace qslforge
