#include "qslforge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qslforge/arc.hpp"
#include "qslforge/errors.hpp"

namespace qslforge {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p, q) with J = Phi * R, where Phi rotates the phase of a(p, q) onto
// the positive real axis and R is the real Jacobi rotation for the resulting
// symmetric 2x2 block.
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const cplx apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const cplx e = apq / g;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cplx jpp = c;
  const cplx jpq = s;
  const cplx jqp = -s * std::conj(e);
  const cplx jqq = c * std::conj(e);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

HermitianSpectrum sorted_spectrum(const RealVector& values, const Matrix& vectors) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return values(x) < values(y); });
  HermitianSpectrum out{RealVector(values.size()), Matrix(vectors.rows(), vectors.cols())};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    out.eigenvalues(i) = values(order[k]);
    out.eigenvectors.col(i) = vectors.col(order[k]);
  }
  return out;
}

}  // namespace

HermitianSpectrum hermitian_spectrum(const Matrix& h, const JacobiOptions& options) {
  if (h.rows() != h.cols()) throw DimensionMismatch("hermitian_spectrum needs a square matrix");
  const Eigen::Index n = h.rows();
  const double limit = options.hermiticity_tol * static_cast<double>(std::max<Eigen::Index>(n, 1));
  const double dev = hermiticity_deviation(h);
  if (!(dev <= limit)) throw NotHermitian(dev, limit);

  Matrix a = 0.5 * (h + h.adjoint());
  Matrix v = Matrix::Identity(n, n);
  const double scale = a.norm();
  const double target = options.relative_tol * scale;
  const long max_sweeps = static_cast<long>(options.max_sweeps_factor) * n * n;

  long sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep++ >= max_sweeps) {
      throw ConvergenceFailure("Jacobi eigensolver did not converge in " +
                               std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }
  return sorted_spectrum(a.diagonal().real(), v);
}

UnitarySpectrum unitary_spectrum(const Matrix& u) {
  if (u.rows() != u.cols()) throw DimensionMismatch("unitary_spectrum needs a square matrix");
  const Eigen::Index n = u.rows();
  const Matrix re = 0.5 * (u + u.adjoint());
  const Matrix im = (u - u.adjoint()) * cplx(0.0, -0.5);

  JacobiOptions loose;
  loose.hermiticity_tol = 1e-6;
  HermitianSpectrum a = hermitian_spectrum(re, loose);
  Matrix v = a.eigenvectors;

  // Resolve every cluster of (numerically) equal eigenvalues of the real
  // part with the imaginary part, which commutes with it.
  const double threshold = 1e-8 * std::max(op_norm(a.eigenvalues), 1.0);
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && a.eigenvalues(end) - a.eigenvalues(end - 1) <= threshold) ++end;
    const Eigen::Index size = end - begin;
    if (size > 1) {
      const Matrix block = v.middleCols(begin, size);
      Matrix w = block.adjoint() * im * block;
      w = 0.5 * (w + w.adjoint());
      const HermitianSpectrum b = hermitian_spectrum(w, loose);
      v.middleCols(begin, size) = block * b.eigenvectors;
    }
    begin = end;
  }

  RealVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double theta = std::arg(v.col(k).dot(u * v.col(k)));
    if (theta <= -kPi + 1e-12) theta = kPi;
    phases(k) = theta;
  }
  const HermitianSpectrum ordered = sorted_spectrum(phases, v);
  return {ordered.eigenvalues, ordered.eigenvectors};
}

UnitarySpectrum unitary_spectrum(const UnitaryGate& gate) { return unitary_spectrum(gate.matrix()); }

Matrix reconstruct(const Matrix& eigenvectors, const RealVector& values) {
  return eigenvectors * values.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

Matrix evolve_exp(const Matrix& h, double dt, double hbar) {
  const HermitianSpectrum s = hermitian_spectrum(h);
  Eigen::VectorXcd phases(s.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -s.eigenvalues(k) * dt / hbar);
  }
  return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix unitary_log(const UnitaryGate& g, double tau, double hbar, LogBranch branch) {
  if (!(tau > 0.0)) throw BadParams("unitary_log needs tau > 0");
  const UnitarySpectrum s = unitary_spectrum(g);
  RealVector phases = s.eigenphases;
  if (branch == LogBranch::centered) {
    const std::span<const double> view(phases.data(), static_cast<std::size_t>(phases.size()));
    phases = centered_phases(view, shortest_covering_arc(view));
  }
  Matrix h = reconstruct(s.eigenvectors, (-hbar / tau) * phases);
  return 0.5 * (h + h.adjoint());
}

double op_norm(const RealVector& eigenvalues) {
  return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

double vector_p_norm(const RealVector& x, double p) {
  if (std::isnan(p) || p < 1.0) throw BadP("p-norm needs p >= 1");
  if (std::isinf(p)) return op_norm(x);
  const double peak = op_norm(x);
  if (peak == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index k = 0; k < x.size(); ++k) sum += std::pow(std::abs(x(k)) / peak, p);
  return peak * std::pow(sum, 1.0 / p);
}

double schatten_norm(const RealVector& eigenvalues, double p) {
  return vector_p_norm(eigenvalues, p);
}

double op_norm(const Matrix& h) { return op_norm(hermitian_spectrum(h).eigenvalues); }

double schatten_norm(const Matrix& h, double p) {
  if (std::isnan(p) || p < 1.0) throw BadP("Schatten norm needs p >= 1");
  return schatten_norm(hermitian_spectrum(h).eigenvalues, p);
}

}  // namespace qslforge
