#include "qslforge/single_qubit.hpp"

#include <cmath>

#include "qslforge/errors.hpp"

namespace qslforge {

namespace {

void require_qubit(int dim, const char* what) {
  if (dim != 2) {
    throw DimensionMismatch(std::string(what) + " needs d = 2, got d = " + std::to_string(dim));
  }
}

double norm3(const std::array<double, 3>& v) { return std::hypot(v[0], v[1], v[2]); }

}  // namespace

const Matrix& pauli(int k) {
  static const std::array<Matrix, 3> sigma = [] {
    const cplx i{0.0, 1.0};
    std::array<Matrix, 3> s{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -i, i, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(k));
}

Matrix pauli_matrix(double u0, const std::array<double, 3>& u) {
  Matrix h = u0 * Matrix::Identity(2, 2);
  for (int k = 0; k < 3; ++k) h += u[static_cast<std::size_t>(k)] * pauli(k);
  return h;
}

PauliDecomposition pauli_decompose(const HamiltonianSchedule& schedule) {
  require_qubit(schedule.dim(), "pauli_decompose");
  PauliDecomposition out;
  for (const Segment& s : schedule.segments()) {
    out.u0.push_back(0.5 * s.h.trace().real());
    std::array<double, 3> u{};
    for (int k = 0; k < 3; ++k) {
      u[static_cast<std::size_t>(k)] = 0.5 * (pauli(k) * s.h).trace().real();
    }
    out.u.push_back(u);
  }
  return out;
}

RotationParams rotation_params(const UnitaryGate& g) {
  require_qubit(g.dim(), "rotation_params");
  const Su2Normalized n = su2_normalize(g);
  const cplx a = n.gate.matrix()(0, 0);
  const cplx b = n.gate.matrix()(0, 1);
  const double sin_half = std::hypot(a.imag(), b.real(), b.imag());

  RotationParams r;
  r.angle = 2.0 * std::atan2(sin_half, std::max(a.real(), 0.0));
  if (sin_half < 1e-15) {
    r.angle = 0.0;
    r.axis = {0.0, 0.0, 1.0};
    r.axis_conventional = true;
    return r;
  }
  r.axis = {-b.imag() / sin_half, -b.real() / sin_half, -a.imag() / sin_half};
  return r;
}

Matrix rotation_matrix(const RotationParams& r) {
  const double c = std::cos(r.angle / 2.0);
  const double s = std::sin(r.angle / 2.0);
  const auto& n = r.axis;
  const cplx i{0.0, 1.0};
  Matrix m(2, 2);
  m << c - i * n[2] * s, s * (-n[1] - i * n[0]),
       s * (n[1] - i * n[0]), c + i * n[2] * s;
  return m;
}

double min_cost_single(const UnitaryGate& g, double hbar) {
  return hbar * rotation_params(g).angle / 2.0;
}

double worst_case_angle(const UnitaryGate& g) { return rotation_params(g).angle / 2.0; }

HamiltonianSchedule optimal_qubit_protocol(const UnitaryGate& g, double tau,
                                           const std::optional<ShapeFunction>& shape,
                                           double hbar) {
  require_qubit(g.dim(), "optimal_qubit_protocol");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw BadParams("tau must be positive");
  const RotationParams r = rotation_params(g);
  const double rate = hbar * r.angle / (2.0 * tau);
  const Matrix h = pauli_matrix(0.0, {rate * r.axis[0], rate * r.axis[1], rate * r.axis[2]});
  if (!shape) return HamiltonianSchedule({Segment{tau, h}}, hbar);

  std::vector<Segment> segments;
  const double dt = tau / shape->segments();
  for (double f : shape->samples()) segments.push_back({dt, f * h});
  return HamiltonianSchedule(std::move(segments), hbar);
}

double omega_cost(const HamiltonianSchedule& schedule) {
  const PauliDecomposition p = pauli_decompose(schedule);
  double total = 0.0;
  for (std::size_t j = 0; j < p.u.size(); ++j) total += schedule.segments()[j].duration * norm3(p.u[j]);
  return total;
}

double rotation_path_length(const HamiltonianSchedule& schedule) {
  return 2.0 * omega_cost(schedule) / schedule.hbar();
}

StrippedSchedule strip_identity_component(const HamiltonianSchedule& schedule) {
  require_qubit(schedule.dim(), "strip_identity_component");
  const PauliDecomposition p = pauli_decompose(schedule);
  std::vector<Segment> stripped;
  double integral = 0.0;
  for (std::size_t j = 0; j < p.u.size(); ++j) {
    const Segment& s = schedule.segments()[j];
    integral += p.u0[j] * s.duration;
    Matrix h = s.h - p.u0[j] * Matrix::Identity(2, 2);
    stripped.push_back({s.duration, 0.5 * (h + h.adjoint())});
  }
  return {HamiltonianSchedule(std::move(stripped), schedule.hbar()), -integral / schedule.hbar()};
}

}  // namespace qslforge
