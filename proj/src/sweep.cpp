#include "qslforge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "qslforge/arc.hpp"
#include "qslforge/bounds.hpp"
#include "qslforge/errors.hpp"
#include "qslforge/evolution.hpp"
#include "qslforge/random.hpp"
#include "qslforge/single_qubit.hpp"
#include "qslforge/spectral.hpp"

namespace qslforge {

const std::vector<std::string>& sweep_bound_families() {
  static const std::vector<std::string> families{
      "area",     "state_cost", "phase_volume_arc", "min_cost",       "sandwich",
      "lebesgue", "schatten",   "identity_strip",   "variable_axis"};
  return families;
}

void validate(const SweepConfig& config) {
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (config.dims.empty()) throw ConfigError("dims must not be empty");
  for (int d : config.dims) {
    if (d != 2 && d != 4 && d != 8 && d != 16) {
      throw ConfigError("dimension " + std::to_string(d) + " not in {2, 4, 8, 16}");
    }
  }
  if (config.max_segments < 1) throw ConfigError("max_segments must be >= 1");
  if (config.states_per_trial < 1) throw ConfigError("states_per_trial must be >= 1");
  const auto& known = sweep_bound_families();
  for (const std::string& b : config.bound_set) {
    if (std::find(known.begin(), known.end(), b) == known.end()) {
      throw ConfigError("unknown bound family '" + b + "'");
    }
  }
}

long SweepSummary::total_violations() const {
  long n = 0;
  for (const BoundTally& t : tallies) n += t.violations;
  return n;
}

namespace {

struct Finding {
  BoundReport report;
  /// Index into TrialResult::states, or -1.
  int state = -1;
  /// Which schedule the report refers to: 0 = random, 1 = variable-axis.
  int schedule = 0;
};

struct TrialResult {
  std::vector<Finding> findings;
  std::vector<HamiltonianSchedule> schedules;
  std::vector<StateVector> states;
  std::optional<UnitaryGate> gate;
};

bool enabled(const SweepConfig& c, const std::string& family) {
  return c.bound_set.empty() ||
         std::find(c.bound_set.begin(), c.bound_set.end(), family) != c.bound_set.end();
}

HamiltonianSchedule variable_axis_schedule(Rng& rng, double hbar) {
  std::uniform_real_distribution<double> angle(0.3, 1.4);
  std::uniform_real_distribution<double> duration(0.1, 1.0);
  std::array<double, 3> a = random_axis(rng);
  std::array<double, 3> b = random_axis(rng);
  // keep the axes at least 0.3 rad away from parallel and antiparallel
  while (std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) > std::cos(0.3)) b = random_axis(rng);
  std::vector<Segment> segments;
  for (const auto& axis : {a, b}) {
    const double phi = angle(rng);
    const double dt = duration(rng);
    const double rate = hbar * phi / (2.0 * dt);
    segments.push_back({dt, pauli_matrix(0.0, {rate * axis[0], rate * axis[1], rate * axis[2]})});
  }
  return HamiltonianSchedule(std::move(segments), hbar);
}

TrialResult run_trial(const SweepConfig& config, std::uint64_t trial) {
  Rng rng = trial_rng(config.seed, trial);
  std::uniform_int_distribution<std::size_t> pick(0, config.dims.size() - 1);
  const int dim = config.dims[pick(rng)];
  RandomScheduleOptions sched_opts;
  sched_opts.max_segments = config.max_segments;

  TrialResult out;
  out.schedules.push_back(random_schedule(dim, rng, sched_opts));
  const HamiltonianSchedule& schedule = out.schedules.front();
  const double hbar = schedule.hbar();
  const double tau = schedule.total_duration();
  const Matrix u = propagate(schedule).u_final;
  out.gate.emplace(u, 1e-8);
  for (int k = 0; k < config.states_per_trial; ++k) out.states.push_back(random_state(dim, rng));

  auto add = [&](BoundReport r, int state = -1, int sched = 0) {
    out.findings.push_back({std::move(r), state, sched});
  };

  const UnitarySpectrum spectrum = unitary_spectrum(u);
  const double L = shortest_covering_arc({spectrum.eigenphases.data(),
                                          static_cast<std::size_t>(spectrum.eigenphases.size())})
                       .length;
  const double area = phase_volume(schedule);
  const double c = cost(schedule);

  if (enabled(config, "area") || enabled(config, "state_cost")) {
    const std::array<double, 3> ps{1.0, 2.0, kInf};
    std::array<double, 3> state_costs{};
    for (std::size_t i = 0; i < ps.size(); ++i) {
      state_costs[i] = cost(schedule, MatrixNorm::schatten(ps[i]), TimeNorm::l1());
    }
    for (int k = 0; k < config.states_per_trial; ++k) {
      const StateVector& psi0 = out.states[static_cast<std::size_t>(k)];
      const double theta = bures_angle(psi0, u * psi0);
      if (enabled(config, "area")) add(make_report("area", area, 2.0 * hbar * theta), k);
      if (enabled(config, "state_cost")) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
          add(make_report("state_cost_p=" + p_label(ps[i]), state_costs[i], hbar * theta), k);
        }
      }
    }
  }
  if (enabled(config, "phase_volume_arc")) add(make_report("phase_volume_arc", area, hbar * L));
  if (enabled(config, "min_cost")) add(make_report("min_cost", c, hbar * L / 2.0));
  if (enabled(config, "sandwich")) {
    add(make_report("sandwich_lower", c, area / 2.0));
    add(make_report("sandwich_upper", area, cost(shift_ground(schedule))));
  }
  if (enabled(config, "lebesgue")) {
    for (double p : {1.0, 2.0, 4.0}) {
      add(make_report("lebesgue_p=" + p_label(p),
                      cost(schedule, MatrixNorm::op(), TimeNorm::lebesgue(p)),
                      hbar * L / 2.0 * std::pow(tau, (1.0 - p) / p)));
    }
  }
  if (enabled(config, "schatten")) {
    for (double p : {1.0, 2.0, kInf}) {
      add(make_report("schatten_p=" + p_label(p),
                      cost(schedule, MatrixNorm::schatten(p), TimeNorm::l1()),
                      hbar * vector_p_norm(spectrum.eigenphases, p)));
    }
  }
  if (dim == 2 && enabled(config, "identity_strip")) {
    const StrippedSchedule stripped = strip_identity_component(schedule);
    const double fidelity = fidelity_up_to_phase(propagate(stripped.schedule).u_final, *out.gate);
    add(make_report("identity_strip_fidelity", fidelity, 1.0 - 1e-9));
    add(make_report("identity_strip_cost", c, cost(stripped.schedule)));
  }
  if (dim == 2 && enabled(config, "variable_axis")) {
    out.schedules.push_back(variable_axis_schedule(rng, hbar));
    const HamiltonianSchedule& two = out.schedules.back();
    const UnitaryGate reached(propagate(two).u_final, 1e-8);
    const double excess = rotation_path_length(two) - rotation_params(reached).angle;
    BoundReport r = make_report("variable_axis_excess", excess, 1e-6);
    r.satisfied = excess > 1e-6;
    add(std::move(r), -1, 1);
  }
  return out;
}

json state_to_json(const StateVector& psi) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < psi.size(); ++k) arr.push_back({psi(k).real(), psi(k).imag()});
  return arr;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& config) {
  validate(config);
  const auto n = static_cast<std::size_t>(config.trials);
  std::vector<TrialResult> results(n);

  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1u, static_cast<unsigned>(n));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = run_trial(config, i);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepSummary summary;
  summary.config = config;
  std::map<std::string, BoundTally> tallies;
  for (std::size_t i = 0; i < n; ++i) {
    const TrialResult& r = results[i];
    for (const Finding& f : r.findings) {
      BoundTally& t = tallies[f.report.bound];
      t.bound = f.report.bound;
      ++t.checked;
      t.min_slack = std::min(t.min_slack, f.report.slack);
      if (f.report.satisfied) continue;
      ++t.violations;
      json repro{{"trial", i},
                 {"seed", config.seed},
                 {"report", bound_report_to_json(f.report)},
                 {"schedule", schedule_to_json(r.schedules[static_cast<std::size_t>(f.schedule)])}};
      if (f.schedule == 0 && r.gate) repro["gate"] = gate_to_json(*r.gate);
      if (f.state >= 0) repro["state"] = state_to_json(r.states[static_cast<std::size_t>(f.state)]);
      summary.violations.push_back(std::move(repro));
    }
  }
  for (auto& [name, t] : tallies) summary.tallies.push_back(t);
  return summary;
}

json sweep_summary_to_json(const SweepSummary& s) {
  json bounds = json::array();
  for (const BoundTally& t : s.tallies) {
    bounds.push_back({{"bound", t.bound},
                      {"checked", t.checked},
                      {"violations", t.violations},
                      {"min_slack", real_to_json(t.min_slack)}});
  }
  return {{"seed", s.config.seed},
          {"trials", s.config.trials},
          {"dims", s.config.dims},
          {"max_segments", s.config.max_segments},
          {"total_violations", s.total_violations()},
          {"bounds", bounds},
          {"violations", s.violations}};
}

}  // namespace qslforge
