#include "qslforge/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qslforge/arc.hpp"
#include "qslforge/bounds.hpp"
#include "qslforge/errors.hpp"
#include "qslforge/evolution.hpp"
#include "qslforge/io.hpp"
#include "qslforge/single_qubit.hpp"
#include "qslforge/spectral.hpp"
#include "qslforge/sweep.hpp"
#include "qslforge/synthesis.hpp"

namespace qslforge {

namespace {

struct GateSource {
  std::string named;
  std::vector<double> params;
  std::string path;
  bool project = false;
  double unitarity_tol = kDefaultUnitarityTol;

  void attach(CLI::App& cmd) {
    auto* n = cmd.add_option("--named", named, "Built-in gate: I X Y Z H S T RX RY RZ CNOT CZ SWAP TOFFOLI");
    auto* g = cmd.add_option("--gate", path, "Gate JSON file")->check(CLI::ExistingFile);
    n->excludes(g);
    cmd.add_option("--params", params, "Gate parameters, e.g. --params 0.5")->delimiter(',');
    cmd.add_flag("--project", project, "Re-project a slightly non-unitary gate onto the unitary group");
    cmd.add_option("--unitarity-tol", unitarity_tol, "Unitarity tolerance per dimension")
        ->check(CLI::PositiveNumber);
  }

  UnitaryGate load() const {
    if (!named.empty()) return named_gate(named, params);
    if (path.empty()) throw ParseError("a gate is required: use --named or --gate");
    return load_gate_file(path, {unitarity_tol, project});
  }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(std::ostream& out, const json& j, const std::string& path) {
  if (path.empty()) {
    out << dump(j);
  } else {
    write_file_atomic(path, dump(j));
  }
}

json real_array(const RealVector& v) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(v(k));
  return arr;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("QSLFORGE_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("QSLFORGE_SEED is not an unsigned integer: '" + std::string(text) + "'");
  }
  return seed;
}

StateVector load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("state")) j = j["state"];
  if (!j.is_array() || j.empty()) throw ParseError("state must be a non-empty array of [re, im]");
  StateVector psi(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& e = j[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("state entry " + std::to_string(k) + " must be a [re, im] pair");
    }
    psi(static_cast<Eigen::Index>(k)) = cplx(e[0].get<double>(), e[1].get<double>());
  }
  return psi;
}

Matrix load_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("matrix")) throw ParseError("Hamiltonian JSON needs \"matrix\"");
    j = j["matrix"];
  }
  return matrix_from_json(j);
}

json limit_to_json(const SpeedLimit& s) {
  return {{"name", s.name}, {"tau_min", real_to_json(s.tau_min)}, {"unbounded", s.unbounded}};
}

// analyze

int cmd_analyze(const GateSource& src, double hbar, const std::string& out_path, std::ostream& out) {
  const UnitaryGate g = src.load();
  const UnitarySpectrum spectrum = unitary_spectrum(g);
  const EigenphaseArc arc = shortest_covering_arc(
      {spectrum.eigenphases.data(), static_cast<std::size_t>(spectrum.eigenphases.size())});
  json report{{"dim", g.dim()},
              {"hbar", hbar},
              {"eigenphases", real_array(spectrum.eigenphases)},
              {"arc_length", arc.length},
              {"arc_start", arc.start},
              {"centering_phase", arc.centering_phase},
              {"min_cost", hbar * arc.length / 2.0}};
  if (g.dim() == 2) {
    const RotationParams r = rotation_params(g);
    report["alpha"] = r.angle;
    report["axis"] = r.axis;
    report["axis_conventional"] = r.axis_conventional;
    report["worst_case_angle"] = worst_case_angle(g);
  }
  emit(out, report, out_path);
  return kExitOk;
}

// synthesize

struct SynthesizeArgs {
  double tau = 0.0;
  std::string shape;
  bool exact_phase = false;
};

int cmd_synthesize(const GateSource& src, const SynthesizeArgs& a, double hbar,
                   const std::string& out_path, std::ostream& out) {
  const UnitaryGate g = src.load();
  ProtocolOptions opts;
  opts.exact_phase = a.exact_phase;
  opts.hbar = hbar;
  if (!a.shape.empty()) opts.shape = ShapeFunction::parse(a.shape);
  const SynthesisResult result = optimal_protocol(g, a.tau, opts);
  json meta = synthesis_metadata_to_json(result);
  meta["tau"] = a.tau;
  meta["segments"] = result.schedule.size();
  meta["shape"] = opts.shape ? opts.shape->name() : "constant";
  meta["cost"] = cost(result.schedule);
  meta["fidelity"] = fidelity_up_to_phase(propagate(result.schedule).u_final, g);
  if (out_path.empty()) {
    out << dump({{"metadata", meta}, {"schedule", schedule_to_json(result.schedule)}});
  } else {
    write_file_atomic(out_path, dump(schedule_to_json(result.schedule)));
    write_file_atomic(out_path + ".meta.json", dump(meta));
    out << dump(meta);
  }
  return kExitOk;
}

// verify

struct VerifyArgs {
  std::string schedule;
  std::string p_list = "1,2,inf";
  bool exact_phase = false;
  bool shift_ground = false;
  double threshold = 1.0 - 1e-8;
};

int cmd_verify(const GateSource& src, const VerifyArgs& a, const std::string& out_path,
               std::ostream& out) {
  const UnitaryGate g = src.load();
  HamiltonianSchedule schedule = load_schedule_file(a.schedule);
  if (schedule.dim() != g.dim()) {
    throw DimensionMismatch("schedule has dimension " + std::to_string(schedule.dim()) +
                            " but gate has dimension " + std::to_string(g.dim()));
  }
  if (a.shift_ground) schedule = shift_ground(schedule);
  const std::vector<double> ps = parse_p_list(a.p_list);
  const Matrix u = propagate(schedule).u_final;
  const double fidelity = a.exact_phase ? exact_fidelity(u, g) : fidelity_up_to_phase(u, g);

  json report{{"fidelity", fidelity},
              {"fidelity_threshold", a.threshold},
              {"exact_phase", a.exact_phase},
              {"shift_ground", a.shift_ground},
              {"costs", cost_report_to_json(cost_report(schedule, ps))}};
  int code = kExitOk;
  try {
    GateBoundOptions opts;
    opts.fidelity_threshold = a.threshold;
    opts.exact_phase = a.exact_phase;
    json bounds = json::array();
    bool all = true;
    for (const BoundReport& r : check_gate_bounds(schedule, g, ps, opts)) {
      bounds.push_back(bound_report_to_json(r));
      all = all && r.satisfied;
    }
    report["allowed"] = true;
    report["bounds"] = bounds;
    report["all_satisfied"] = all;
    if (!all) code = kExitVerification;
  } catch (const NotAllowedProtocol& e) {
    report["allowed"] = false;
    report["error"] = e.what();
    report["bounds"] = json::array();
    report["all_satisfied"] = false;
    code = kExitVerification;
  }
  emit(out, report, out_path);
  return code;
}

// qsl

struct QslArgs {
  std::string hamiltonian;
  std::string state;
  double theta = 0.0;
  std::string p_list = "1,2,inf";
  std::optional<double> elapsed;
};

int cmd_qsl(const QslArgs& a, double hbar, const std::string& out_path, std::ostream& out) {
  const Matrix h = load_hamiltonian_file(a.hamiltonian);
  json report{{"theta", a.theta}, {"hbar", hbar}};
  std::vector<SpeedLimit> limits;
  const StateIndependentLimits si = tau_qsl_state_independent(h, a.theta, hbar);
  limits.push_back(si.mandelstam_tamm);
  limits.push_back(si.margolus_levitin);
  for (double p : parse_p_list(a.p_list)) limits.push_back(tau_qsl_schatten(h, a.theta, p, hbar));
  if (!a.state.empty()) {
    StateVector psi = load_state_file(a.state);
    if (psi.size() != h.rows()) {
      throw DimensionMismatch("state has dimension " + std::to_string(psi.size()) +
                              " but Hamiltonian has dimension " + std::to_string(h.rows()));
    }
    const EnergyStats stats = energy_stats(h, psi);
    report["energy"] = {{"mean", stats.mean},
                        {"stddev", stats.stddev},
                        {"ground_gap", stats.ground_gap},
                        {"spread", stats.spread}};
    const StateSpeedLimits sd = tau_qsl_state(h, psi, a.theta, hbar);
    limits.push_back(sd.mandelstam_tamm);
    limits.push_back(sd.margolus_levitin);
    limits.push_back(sd.unified);
  }
  json arr = json::array();
  json checks = json::array();
  bool all = true;
  for (const SpeedLimit& s : limits) {
    arr.push_back(limit_to_json(s));
    if (a.elapsed) {
      const BoundReport r = s.check(*a.elapsed);
      checks.push_back(bound_report_to_json(r));
      all = all && r.satisfied;
    }
  }
  report["limits"] = arr;
  if (a.elapsed) {
    report["elapsed"] = *a.elapsed;
    report["checks"] = checks;
    report["all_satisfied"] = all;
  }
  emit(out, report, out_path);
  return all ? kExitOk : kExitVerification;
}

// sweep

struct SweepArgs {
  int trials = 1000;
  std::string dims = "2,4";
  std::optional<std::uint64_t> seed;
  int max_segments = 32;
  std::string bounds;
  int states = 10;
  unsigned threads = 0;
};

int cmd_sweep(const SweepArgs& a, const std::string& out_path, std::ostream& out) {
  SweepConfig config;
  config.trials = a.trials;
  config.dims.clear();
  for (const std::string& d : split_list(a.dims)) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || ptr != d.data() + d.size()) {
      throw ConfigError("bad dimension '" + d + "'");
    }
    config.dims.push_back(v);
  }
  config.seed = a.seed ? *a.seed : default_seed();
  config.max_segments = a.max_segments;
  config.bound_set = split_list(a.bounds);
  config.states_per_trial = a.states;
  config.threads = a.threads;
  const SweepSummary summary = run_sweep(config);
  emit(out, sweep_summary_to_json(summary), out_path);
  return kExitOk;
}

// trajectories

int cmd_trajectories(const std::string& schedule_path, int samples, const std::string& out_path,
                     std::ostream& out, std::ostream& err) {
  const HamiltonianSchedule schedule = load_schedule_file(schedule_path);
  const Trajectory trajectory = eigenvalue_trajectories(schedule, samples);
  std::ostringstream csv;
  write_trajectory_csv(csv, trajectory);
  const json summary{{"phase_volume", phase_volume(schedule)},
                     {"integrated_spread", trajectory.integrated_spread()},
                     {"rows", trajectory.t.size()}};
  if (out_path.empty()) {
    out << csv.str();
    err << summary.dump() << "\n";
  } else {
    write_file_atomic(out_path, csv.str());
    out << dump(summary);
  }
  return kExitOk;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const NotAllowedProtocol*>(&e) != nullptr) return kExitVerification;
  if (dynamic_cast<const ConvergenceFailure*>(&e) != nullptr) return kExitNumerical;
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-cost gate synthesis and quantum speed limit checks", "qslforge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qslforge 0.1.0");

  double hbar = 1.0;
  std::string out_path;
  auto common = [&](CLI::App& cmd) {
    cmd.add_option("--hbar", hbar, "Reduced Planck constant")->check(CLI::PositiveNumber);
    cmd.add_option("--out", out_path, "Write the result to this file instead of stdout");
  };

  GateSource gate;

  auto* analyze = app.add_subcommand("analyze", "Eigenphases, arc length and minimum cost of a gate");
  gate.attach(*analyze);
  common(*analyze);

  SynthesizeArgs syn;
  auto* synthesize = app.add_subcommand("synthesize", "Build a minimum-cost Hamiltonian schedule");
  gate.attach(*synthesize);
  common(*synthesize);
  synthesize->add_option("--tau", syn.tau, "Total duration")->required()->check(CLI::PositiveNumber);
  synthesize->add_option("--shape", syn.shape, "Pulse shape name:M (constant, triangular, sin2, bang)");
  synthesize->add_flag("--exact-phase", syn.exact_phase, "Reproduce the gate including global phase");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Propagate a schedule and check every gate bound");
  gate.attach(*verify);
  common(*verify);
  verify->add_option("--schedule", ver.schedule, "Schedule JSON file")->required()->check(CLI::ExistingFile);
  verify->add_option("--p", ver.p_list, "Comma separated p values (>= 1 or inf)");
  verify->add_flag("--exact-phase", ver.exact_phase, "Require the gate including global phase");
  verify->add_flag("--shift-ground", ver.shift_ground, "Shift each segment so its ground energy is 0");
  verify->add_option("--threshold", ver.threshold, "Fidelity threshold")->check(CLI::Range(0.0, 1.0));

  QslArgs qsl;
  auto* qsl_cmd = app.add_subcommand("qsl", "Speed limits for a time-independent Hamiltonian");
  common(*qsl_cmd);
  qsl_cmd->add_option("--hamiltonian", qsl.hamiltonian, "Hamiltonian matrix JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  qsl_cmd->add_option("--theta", qsl.theta, "Target Bures angle")->required()->check(CLI::NonNegativeNumber);
  qsl_cmd->add_option("--state", qsl.state, "Initial state JSON file")->check(CLI::ExistingFile);
  qsl_cmd->add_option("--p", qsl.p_list, "Comma separated Schatten p values");
  qsl_cmd->add_option("--elapsed", qsl.elapsed, "Check the limits against this duration");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Randomized audit of every bound");
  sweep->add_option("--out", out_path, "Write the summary to this file instead of stdout");
  sweep->add_option("--trials", sw.trials, "Number of random schedules");
  sweep->add_option("--dims", sw.dims, "Comma separated dimensions from {2,4,8,16}");
  sweep->add_option("--seed", sw.seed, "Master seed (default: $QSLFORGE_SEED or 0)");
  sweep->add_option("--max-segments", sw.max_segments, "Maximum segments per schedule");
  sweep->add_option("--bounds", sw.bounds, "Comma separated bound families (default: all)");
  sweep->add_option("--states", sw.states, "Random initial states per trial");
  sweep->add_option("--threads", sw.threads, "Worker threads (0 = hardware concurrency)");

  std::string traj_schedule;
  int samples = 16;
  auto* traj = app.add_subcommand("trajectories", "Export instantaneous eigenvalues as CSV");
  traj->add_option("--schedule", traj_schedule, "Schedule JSON file")->required()->check(CLI::ExistingFile);
  traj->add_option("--samples", samples, "Samples per segment")->check(CLI::PositiveNumber);
  traj->add_option("--out", out_path, "CSV output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(gate, hbar, out_path, out);
    if (synthesize->parsed()) return cmd_synthesize(gate, syn, hbar, out_path, out);
    if (verify->parsed()) return cmd_verify(gate, ver, out_path, out);
    if (qsl_cmd->parsed()) return cmd_qsl(qsl, hbar, out_path, out);
    if (sweep->parsed()) return cmd_sweep(sw, out_path, out);
    if (traj->parsed()) return cmd_trajectories(traj_schedule, samples, out_path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qslforge
