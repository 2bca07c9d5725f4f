#include "qslforge/gate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <Eigen/SVD>

#include "qslforge/errors.hpp"

namespace qslforge {

double unitarity_deviation(const Matrix& m) {
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
}

double hermiticity_deviation(const Matrix& m) { return (m - m.adjoint()).norm(); }

namespace {

void require_square(const Matrix& m, int min_dim) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
  }
  if (m.rows() < min_dim) {
    throw DimensionMismatch("matrix dimension " + std::to_string(m.rows()) +
                            " is below the minimum " + std::to_string(min_dim));
  }
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const cplx z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

}  // namespace

UnitaryGate::UnitaryGate(Matrix matrix, double unitarity_tol) : matrix_(std::move(matrix)) {
  require_square(matrix_, 2);
  if (!all_finite(matrix_)) throw NotUnitary(kInf, unitarity_tol * static_cast<double>(dim()));
  deviation_ = unitarity_deviation(matrix_);
  const double limit = unitarity_tol * static_cast<double>(dim());
  if (!(deviation_ <= limit)) throw NotUnitary(deviation_, limit);
}

UnitaryGate UnitaryGate::projected(const Matrix& matrix, double unitarity_tol) {
  require_square(matrix, 2);
  const double limit = unitarity_tol * static_cast<double>(matrix.rows());
  const double deviation = all_finite(matrix) ? unitarity_deviation(matrix) : kInf;
  if (deviation <= limit) return UnitaryGate(matrix, unitarity_tol);
  if (!(deviation <= 10.0 * limit)) throw NotUnitary(deviation, 10.0 * limit);
  Eigen::JacobiSVD<Matrix> svd(matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return UnitaryGate(svd.matrixU() * svd.matrixV().adjoint(), unitarity_tol);
}

HamiltonianSchedule::HamiltonianSchedule(std::vector<Segment> segments, double hbar,
                                         double hermiticity_tol)
    : segments_(std::move(segments)), hbar_(hbar) {
  if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) throw InvalidSchedule("hbar must be positive");
  if (segments_.empty()) throw InvalidSchedule("schedule has no segments");
  const Eigen::Index d = segments_.front().h.rows();
  for (std::size_t j = 0; j < segments_.size(); ++j) {
    const Segment& s = segments_[j];
    if (!(s.duration > 0.0) || !std::isfinite(s.duration)) {
      throw InvalidSchedule("segment " + std::to_string(j) + " has non-positive duration");
    }
    require_square(s.h, 1);
    if (s.h.rows() != d) {
      throw DimensionMismatch("segment " + std::to_string(j) + " has dimension " +
                              std::to_string(s.h.rows()) + ", expected " + std::to_string(d));
    }
    if (!all_finite(s.h)) throw NotHermitian(kInf, hermiticity_tol * static_cast<double>(d));
    const double dev = hermiticity_deviation(s.h);
    if (!(dev <= hermiticity_tol * static_cast<double>(d))) {
      throw NotHermitian(dev, hermiticity_tol * static_cast<double>(d));
    }
    total_duration_ += s.duration;
  }
}

HamiltonianSchedule HamiltonianSchedule::zero(int dim, double tau, double hbar) {
  return HamiltonianSchedule({Segment{tau, Matrix::Zero(dim, dim)}}, hbar);
}

ShapeFunction::ShapeFunction(std::vector<double> samples, std::string name)
    : samples_(std::move(samples)), name_(std::move(name)) {
  if (samples_.empty()) throw BadShape("shape has no samples");
  for (double s : samples_) {
    if (!std::isfinite(s) || s < 0.0) throw BadShape("shape samples must be finite and >= 0");
  }
  const double mean =
      std::accumulate(samples_.begin(), samples_.end(), 0.0) / static_cast<double>(samples_.size());
  if (std::abs(mean - 1.0) > 1e-12) {
    throw BadShape("shape samples must have mean 1 (got " + std::to_string(mean) + ")");
  }
}

namespace {

// Per-cell averages of a shape given the antiderivative of f on [0, 1],
// rescaled so the mean is exactly 1 up to rounding.
template <class Antiderivative>
std::vector<double> cell_averages(int m, Antiderivative F) {
  if (m < 1) throw BadShape("shape needs at least one segment");
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double x0 = static_cast<double>(j) / m;
    const double x1 = static_cast<double>(j + 1) / m;
    out[static_cast<std::size_t>(j)] = std::max(0.0, (F(x1) - F(x0)) * m);
  }
  const double mean = std::accumulate(out.begin(), out.end(), 0.0) / m;
  for (double& v : out) v /= mean;
  return out;
}

}  // namespace

ShapeFunction ShapeFunction::constant(int segments) {
  if (segments < 1) throw BadShape("shape needs at least one segment");
  return ShapeFunction(std::vector<double>(static_cast<std::size_t>(segments), 1.0), "constant");
}

ShapeFunction ShapeFunction::triangular(int segments) {
  auto F = [](double x) { return x <= 0.5 ? 2.0 * x * x : 1.0 - 2.0 * (1.0 - x) * (1.0 - x); };
  return ShapeFunction(cell_averages(segments, F), "triangular");
}

ShapeFunction ShapeFunction::sin2(int segments) {
  auto F = [](double x) { return x - std::sin(kTwoPi * x) / kTwoPi; };
  return ShapeFunction(cell_averages(segments, F), "sin2");
}

ShapeFunction ShapeFunction::bang(int segments) {
  auto F = [](double x) { return std::min(2.0 * x, 1.0); };
  return ShapeFunction(cell_averages(segments, F), "bang");
}

ShapeFunction ShapeFunction::parse(std::string_view spec) {
  std::string_view name = spec;
  int m = kDefaultShapeSegments;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    const std::string_view count = spec.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), m);
    if (ec != std::errc() || ptr != count.data() + count.size() || m < 1) {
      throw BadShape("bad segment count in shape spec '" + std::string(spec) + "'");
    }
  } else if (name == "constant") {
    m = 1;
  }
  if (name == "constant") return constant(m);
  if (name == "triangular") return triangular(m);
  if (name == "sin2") return sin2(m);
  if (name == "bang") return bang(m);
  throw BadShape("unknown shape '" + std::string(name) + "'");
}

bool ShapeFunction::is_constant() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](double s) { return std::abs(s - 1.0) <= 1e-12; });
}

double wrap_phase(double phase) {
  double r = std::remainder(phase, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

Su2Normalized su2_normalize(const UnitaryGate& gate) {
  if (gate.dim() != 2) {
    throw DimensionMismatch("su2_normalize needs a 2x2 gate, got d = " +
                            std::to_string(gate.dim()));
  }
  const Matrix& g = gate.matrix();
  const cplx det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  double phase = 0.5 * std::arg(det);
  Matrix n = g * std::polar(1.0, -phase);

  constexpr double eps = 1e-12;
  const cplx a = n(0, 0);
  const cplx b = n(0, 1);
  bool flip = false;
  if (a.real() < -eps) {
    flip = true;
  } else if (std::abs(a.real()) <= eps) {
    if (a.imag() > eps) {
      flip = true;
    } else if (std::abs(a.imag()) <= eps) {
      if (b.real() < -eps) {
        flip = true;
      } else if (std::abs(b.real()) <= eps && b.imag() > eps) {
        flip = true;
      }
    }
  }
  if (flip) {
    n = -n;
    phase += kPi;
  }
  // A global phase leaves the unitarity deviation unchanged.
  const double tol = std::max(kDefaultUnitarityTol, gate.deviation());
  return {UnitaryGate(std::move(n), tol), wrap_phase(phase)};
}

}  // namespace qslforge
