#pragma once

#include "qslforge/gate.hpp"
#include "qslforge/types.hpp"

namespace qslforge {

/// Eigenvalues sorted ascending with matching orthonormal eigenvector columns.
struct HermitianSpectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

/// Eigenphases in (-pi, pi] with orthonormal eigenvector columns, so that
/// U = sum_n e^{i theta_n} |phi_n><phi_n|.
struct UnitarySpectrum {
  RealVector eigenphases;
  Matrix eigenvectors;
};

struct JacobiOptions {
  double hermiticity_tol = kDefaultHermiticityTol;
  /// Stop once the off-diagonal Frobenius mass drops below this times ||H||_F.
  double relative_tol = 1e-12;
  /// Sweep cap is max_sweeps_factor * d^2.
  int max_sweeps_factor = 100;
};

/// Cyclic complex Jacobi diagonalization. Throws NotHermitian or
/// ConvergenceFailure.
HermitianSpectrum hermitian_spectrum(const Matrix& h, const JacobiOptions& options = {});

/// Spectrum of a unitary matrix via its commuting Hermitian parts
/// A = (U + U^dag)/2 and B = (U - U^dag)/(2i): A is diagonalized first, then
/// B is diagonalized inside every degenerate eigenspace of A. Phases are
/// read off as arg(<phi|U|phi>); a phase within 1e-12 of -pi becomes +pi.
UnitarySpectrum unitary_spectrum(const Matrix& u);
UnitarySpectrum unitary_spectrum(const UnitaryGate& gate);

/// e^{-i h dt / hbar} evaluated on the eigenbasis of h.
Matrix evolve_exp(const Matrix& h, double dt, double hbar = 1.0);

enum class LogBranch {
  /// Phases shifted globally so the shortest covering arc is symmetric
  /// about 0; the result generates e^{i phi} g for the centering phase phi.
  centered,
  /// Principal phases in (-pi, pi]; the result generates g exactly.
  principal,
};

/// Hermitian H = i hbar ln(g) / tau, i.e. eigenvalues -hbar theta_n / tau on
/// the eigenvectors of g.
Matrix unitary_log(const UnitaryGate& g, double tau, double hbar = 1.0,
                   LogBranch branch = LogBranch::centered);

/// max_n |E_n|
double op_norm(const Matrix& h);
/// (sum_n |E_n|^p)^{1/p}; p = infinity gives op_norm. Throws BadP for p < 1.
double schatten_norm(const Matrix& h, double p);
/// Same norms evaluated from an already computed spectrum.
double op_norm(const RealVector& eigenvalues);
double schatten_norm(const RealVector& eigenvalues, double p);
/// (sum_n |x_n|^p)^{1/p} for a real vector.
double vector_p_norm(const RealVector& x, double p);

/// Rebuilds V diag(values) V^dag.
Matrix reconstruct(const Matrix& eigenvectors, const RealVector& values);

}  // namespace qslforge
