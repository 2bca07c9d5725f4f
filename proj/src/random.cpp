#include "qslforge/random.hpp"

#include <Eigen/QR>

namespace qslforge {

Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

namespace {

Matrix gaussian(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) m(i, j) = cplx(normal(rng), normal(rng));
  }
  return m;
}

}  // namespace

UnitaryGate haar_unitary(int dim, Rng& rng) {
  const Matrix z = gaussian(dim, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return UnitaryGate(std::move(q));
}

Matrix random_hermitian(int dim, Rng& rng, double scale) {
  const Matrix g = gaussian(dim, rng);
  return (0.5 * scale) * (g + g.adjoint());
}

StateVector random_state(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  StateVector psi(dim);
  for (int k = 0; k < dim; ++k) psi(k) = cplx(normal(rng), normal(rng));
  return psi / psi.norm();
}

HamiltonianSchedule random_schedule(int dim, Rng& rng, const RandomScheduleOptions& options) {
  std::uniform_int_distribution<int> count(1, options.max_segments);
  std::uniform_real_distribution<double> duration(options.min_duration, options.max_duration);
  const int m = count(rng);
  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double dt = duration(rng);
    segments.push_back({dt, random_hermitian(dim, rng, options.energy_scale)});
  }
  return HamiltonianSchedule(std::move(segments), options.hbar);
}

std::array<double, 3> random_axis(Rng& rng) {
  std::normal_distribution<double> normal;
  std::array<double, 3> v{};
  double n = 0.0;
  while (n < 1e-6) {
    v = {normal(rng), normal(rng), normal(rng)};
    n = std::hypot(v[0], v[1], v[2]);
  }
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace qslforge
