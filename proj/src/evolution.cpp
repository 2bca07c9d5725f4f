#include "qslforge/evolution.hpp"

#include <cmath>

#include "qslforge/errors.hpp"
#include "qslforge/spectral.hpp"

namespace qslforge {

namespace {

void check_p(double p, const char* what) {
  if (std::isnan(p) || p < 1.0) throw BadP(std::string(what) + " needs p >= 1");
}

}  // namespace

Propagation propagate(const HamiltonianSchedule& schedule, const std::optional<StateVector>& psi0) {
  const int d = schedule.dim();
  if (psi0) {
    if (psi0->size() != d) {
      throw DimensionMismatch("initial state has dimension " + std::to_string(psi0->size()) +
                              ", schedule has " + std::to_string(d));
    }
    if (std::abs(psi0->norm() - 1.0) > 1e-10) throw NormError("initial state is not normalized");
  }
  Matrix u = Matrix::Identity(d, d);
  for (const Segment& s : schedule.segments()) u = evolve_exp(s.h, s.duration, schedule.hbar()) * u;
  Propagation out{u, std::nullopt};
  if (psi0) out.psi_final = u * *psi0;
  return out;
}

std::vector<Matrix> propagate_path(const HamiltonianSchedule& schedule) {
  const int d = schedule.dim();
  std::vector<Matrix> path{Matrix::Identity(d, d)};
  for (const Segment& s : schedule.segments()) {
    path.push_back(evolve_exp(s.h, s.duration, schedule.hbar()) * path.back());
  }
  return path;
}

double fidelity_up_to_phase(const Matrix& u, const UnitaryGate& g) {
  if (u.rows() != g.dim() || u.cols() != g.dim()) {
    throw DimensionMismatch("fidelity: operator and gate dimensions differ");
  }
  return std::abs((g.matrix().adjoint() * u).trace()) / static_cast<double>(g.dim());
}

double exact_fidelity(const Matrix& u, const UnitaryGate& g) {
  if (u.rows() != g.dim() || u.cols() != g.dim()) {
    throw DimensionMismatch("fidelity: operator and gate dimensions differ");
  }
  return (g.matrix().adjoint() * u).trace().real() / static_cast<double>(g.dim());
}

double phase_volume(const HamiltonianSchedule& schedule) {
  double area = 0.0;
  for (const Segment& s : schedule.segments()) {
    const RealVector e = hermitian_spectrum(s.h).eigenvalues;
    area += s.duration * (e(e.size() - 1) - e(0));
  }
  return area;
}

std::vector<double> segment_norms(const HamiltonianSchedule& schedule, MatrixNorm matrix_norm) {
  check_p(matrix_norm.p, "Schatten norm");
  std::vector<double> norms;
  norms.reserve(schedule.size());
  for (const Segment& s : schedule.segments()) {
    norms.push_back(schatten_norm(hermitian_spectrum(s.h).eigenvalues, matrix_norm.p));
  }
  return norms;
}

double cost(const HamiltonianSchedule& schedule, MatrixNorm matrix_norm, TimeNorm time_norm) {
  check_p(time_norm.p, "Lebesgue norm");
  const std::vector<double> norms = segment_norms(schedule, matrix_norm);
  const auto& segs = schedule.segments();
  if (std::isinf(time_norm.p)) {
    double peak = 0.0;
    for (double n : norms) peak = std::max(peak, n);
    return peak;
  }
  if (time_norm.p == 1.0) {
    double sum = 0.0;
    for (std::size_t j = 0; j < segs.size(); ++j) sum += segs[j].duration * norms[j];
    return sum;
  }
  double peak = 0.0;
  for (double n : norms) peak = std::max(peak, n);
  if (peak == 0.0) return 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < segs.size(); ++j) {
    sum += segs[j].duration * std::pow(norms[j] / peak, time_norm.p);
  }
  return peak * std::pow(sum, 1.0 / time_norm.p);
}

CostReport cost_report(const HamiltonianSchedule& schedule, std::span<const double> p_list) {
  for (double p : p_list) check_p(p, "cost report");
  CostReport r;
  r.tau = schedule.total_duration();
  r.phase_volume = phase_volume(schedule);
  r.c_opnorm = cost(schedule);

  std::vector<double> ps(p_list.begin(), p_list.end());
  ps.push_back(1.0);
  ps.push_back(kInf);
  for (double p : ps) {
    r.c_schatten[p] = cost(schedule, MatrixNorm::schatten(p), TimeNorm::l1());
    r.c_lebesgue[p] = cost(schedule, MatrixNorm::op(), TimeNorm::lebesgue(p));
  }
  return r;
}

HamiltonianSchedule shift_ground(const HamiltonianSchedule& schedule) {
  std::vector<Segment> shifted;
  shifted.reserve(schedule.size());
  for (const Segment& s : schedule.segments()) {
    const double e0 = hermitian_spectrum(s.h).eigenvalues(0);
    shifted.push_back({s.duration, s.h - e0 * Matrix::Identity(s.h.rows(), s.h.cols())});
  }
  return HamiltonianSchedule(std::move(shifted), schedule.hbar());
}

double Trajectory::integrated_spread() const {
  double area = 0.0;
  for (std::size_t k = 1; k < t.size(); ++k) {
    const RealVector& a = energies[k - 1];
    const RealVector& b = energies[k];
    const double spread_a = a(a.size() - 1) - a(0);
    const double spread_b = b(b.size() - 1) - b(0);
    area += 0.5 * (t[k] - t[k - 1]) * (spread_a + spread_b);
  }
  return area;
}

Trajectory eigenvalue_trajectories(const HamiltonianSchedule& schedule, int samples_per_segment) {
  if (samples_per_segment < 1) throw BadParams("samples_per_segment must be >= 1");
  Trajectory out;
  double t0 = 0.0;
  for (const Segment& s : schedule.segments()) {
    const RealVector e = hermitian_spectrum(s.h).eigenvalues;
    for (int k = 0; k <= samples_per_segment; ++k) {
      out.t.push_back(t0 + s.duration * static_cast<double>(k) / samples_per_segment);
      out.energies.push_back(e);
    }
    t0 += s.duration;
  }
  return out;
}

}  // namespace qslforge
