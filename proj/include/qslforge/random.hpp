#pragma once

#include <cstdint>
#include <random>

#include "qslforge/gate.hpp"

namespace qslforge {

using Rng = std::mt19937_64;

/// Independent generator for one trial of a seeded run.
Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
UnitaryGate haar_unitary(int dim, Rng& rng);

/// GUE-style Hermitian matrix (G + G^dag) / 2 with standard normal entries,
/// times `scale`.
Matrix random_hermitian(int dim, Rng& rng, double scale = 1.0);

/// Uniformly distributed unit vector.
StateVector random_state(int dim, Rng& rng);

struct RandomScheduleOptions {
  int max_segments = 32;
  double min_duration = 0.05;
  double max_duration = 1.0;
  double energy_scale = 1.0;
  double hbar = 1.0;
};

/// 1..max_segments segments with uniform durations and independent random
/// Hermitian matrices.
HamiltonianSchedule random_schedule(int dim, Rng& rng, const RandomScheduleOptions& options = {});

/// Uniform point on the unit sphere.
std::array<double, 3> random_axis(Rng& rng);

}  // namespace qslforge
