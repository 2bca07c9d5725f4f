#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qslforge/types.hpp"

namespace qslforge {

inline constexpr double kDefaultUnitarityTol = 1e-9;
inline constexpr double kDefaultHermiticityTol = 1e-9;

/// ||G^dagger G - I||_F
double unitarity_deviation(const Matrix& m);
/// ||H - H^dagger||_F
double hermiticity_deviation(const Matrix& m);

/// A validated d x d unitary matrix (d >= 2): the target gate.
///
/// Construction checks ||G^dagger G - I||_F <= tol * d and throws NotUnitary
/// otherwise. Instances are immutable.
class UnitaryGate {
 public:
  explicit UnitaryGate(Matrix matrix, double unitarity_tol = kDefaultUnitarityTol);

  /// Accepts matrices that miss unitarity by at most 10x the tolerance and
  /// replaces them with their polar (nearest unitary) factor. Anything worse
  /// still throws NotUnitary.
  static UnitaryGate projected(const Matrix& matrix, double unitarity_tol = kDefaultUnitarityTol);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const noexcept { return matrix_; }
  double deviation() const noexcept { return deviation_; }

 private:
  Matrix matrix_;
  double deviation_ = 0.0;
};

struct Segment {
  double duration = 0.0;
  Matrix h;
};

/// Piecewise-constant Hamiltonian H(t): an ordered list of (duration, h)
/// segments sharing one dimension, plus the value of hbar in the caller's
/// units. Later segments act later in time.
class HamiltonianSchedule {
 public:
  HamiltonianSchedule(std::vector<Segment> segments, double hbar = 1.0,
                      double hermiticity_tol = kDefaultHermiticityTol);

  /// A single segment with h = 0.
  static HamiltonianSchedule zero(int dim, double tau, double hbar = 1.0);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  double hbar() const noexcept { return hbar_; }
  int dim() const noexcept { return static_cast<int>(segments_.front().h.rows()); }
  double total_duration() const noexcept { return total_duration_; }
  std::size_t size() const noexcept { return segments_.size(); }

 private:
  std::vector<Segment> segments_;
  double hbar_;
  double total_duration_ = 0.0;
};

/// Bloch-sphere rotation R(axis, angle) with angle in [0, pi].
struct RotationParams {
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double angle = 0.0;
  /// True when angle == 0 and the axis is the z convention rather than data.
  bool axis_conventional = false;
};

/// Nonnegative shape f(t) stored as per-segment averages over a uniform grid
/// on (0, tau), normalized to mean 1.
class ShapeFunction {
 public:
  explicit ShapeFunction(std::vector<double> samples, std::string name = "custom");

  static ShapeFunction constant(int segments = 1);
  /// Symmetric tent peaking at tau/2.
  static ShapeFunction triangular(int segments);
  /// 2 sin^2(pi t / tau).
  static ShapeFunction sin2(int segments);
  /// 2 on the first half of the interval, 0 on the second.
  static ShapeFunction bang(int segments);
  /// Parses "name:M". A bare "name" uses 64 segments, or 1 for constant.
  static ShapeFunction parse(std::string_view spec);

  const std::vector<double>& samples() const noexcept { return samples_; }
  int segments() const noexcept { return static_cast<int>(samples_.size()); }
  const std::string& name() const noexcept { return name_; }
  /// Every sample equals 1 within 1e-12.
  bool is_constant() const noexcept;

 private:
  std::vector<double> samples_;
  std::string name_;
};

inline constexpr int kDefaultShapeSegments = 64;

/// Standard gates: I, X, Y, Z, H, S, T, RX, RY, RZ, CNOT, CZ, SWAP, TOFFOLI.
/// Rotations take exactly one angle, RX(theta) = exp(-i theta X / 2).
UnitaryGate named_gate(std::string_view name, std::span<const double> params = {});

struct Su2Normalized {
  UnitaryGate gate;
  double extracted_phase = 0.0;
};

/// Splits a 2x2 gate into e^{i phase} * G~ with det G~ = 1 and Re(G~_00) >= 0.
///
/// When Re(a) vanishes (rotation angle pi) the two determinant-one
/// representatives generate the same rotation, so the choice is fixed by
/// Im(a) <= 0, then Re(b) >= 0, then Im(b) <= 0.
Su2Normalized su2_normalize(const UnitaryGate& gate);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

}  // namespace qslforge
