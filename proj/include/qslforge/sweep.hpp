#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qslforge/io.hpp"

namespace qslforge {

/// Randomized audit configuration. Bound families:
///   area            A >= 2 hbar B(psi0, psi_tau)            (random states)
///   state_cost      int ||H||_p dt >= hbar B, p = 1, 2, inf (random states)
///   phase_volume_arc  A >= hbar L[U(tau)]
///   min_cost        C >= hbar L[U(tau)] / 2
///   sandwich        C >= A / 2 and A >= C after ground shift
///   lebesgue        C_p >= (hbar L / 2) tau^{(1-p)/p}, p = 1, 2, 4
///   schatten        int ||H||_p dt >= hbar |theta(U(tau))|_p, p = 1, 2, inf
///   identity_strip  (d = 2) dropping u0 keeps U up to phase, never adds cost
///   variable_axis   (d = 2) two non-parallel rotations overshoot alpha
struct SweepConfig {
  int trials = 1000;
  std::vector<int> dims{2, 4};
  std::uint64_t seed = 0;
  int max_segments = 32;
  /// Empty selects every family.
  std::vector<std::string> bound_set;
  int states_per_trial = 10;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

const std::vector<std::string>& sweep_bound_families();

/// Throws ConfigError for trials < 1, dims outside {2, 4, 8, 16}, empty
/// dims, max_segments < 1, or unknown bound families.
void validate(const SweepConfig& config);

struct BoundTally {
  std::string bound;
  long checked = 0;
  long violations = 0;
  double min_slack = kInf;
};

struct SweepSummary {
  SweepConfig config;
  std::vector<BoundTally> tallies;
  /// One reproducer per violation: trial, seed, bound report, gate,
  /// schedule, and initial state where one was used.
  std::vector<json> violations;
  long total_violations() const;
};

/// Deterministic for a given config regardless of thread count: trials are
/// seeded independently and merged in trial order.
SweepSummary run_sweep(const SweepConfig& config);

json sweep_summary_to_json(const SweepSummary& summary);

}  // namespace qslforge
