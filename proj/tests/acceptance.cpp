// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qslforge/arc.hpp"
#include "qslforge/bounds.hpp"
#include "qslforge/cli.hpp"
#include "qslforge/evolution.hpp"
#include "qslforge/io.hpp"
#include "qslforge/random.hpp"
#include "qslforge/single_qubit.hpp"
#include "qslforge/spectral.hpp"
#include "qslforge/sweep.hpp"
#include "qslforge/synthesis.hpp"

using namespace qslforge;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double max_abs(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// 1
Outcome hadamard_golden() {
  const auto t0 = Clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli({"synthesize", "--named", "H", "--tau", "1"}, out, err);
  const double elapsed = seconds_since(t0);
  if (code != 0) return {false, "synthesize exited with " + std::to_string(code)};
  const HamiltonianSchedule s = schedule_from_json(json::parse(out.str())["schedule"]);
  const double dev = s.size() == 1 ? max_abs(s.segments()[0].h, oracle::hadamard_hamiltonian()) : 1.0;
  const double fid = fidelity_up_to_phase(propagate(s).u_final, named_gate("H"));
  const double c = cost(s);
  Outcome o;
  o.pass = s.size() == 1 && dev <= 1e-9 && fid >= 1 - 1e-9 && std::abs(c - oracle::pi / 2) <= 1e-9 &&
           elapsed < 0.1;
  o.detail = fmt("max|H-H_ref|=%.1e fidelity=%.15f cost-pi/2=%.1e time=%.4fs", dev, fid, c - oracle::pi / 2, elapsed);
  return o;
}

// 2
Outcome single_qubit_cost_law() {
  const auto t0 = Clock::now();
  Rng rng = trial_rng(2002, 0);
  double worst_law = 0.0;
  double worst_attain = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const UnitaryGate g = haar_unitary(2, rng);
    const double single = min_cost_single(g);
    const double alpha = rotation_params(g).angle;
    const double nq = arc_length(g) / 2.0;
    worst_law = std::max({worst_law, std::abs(single - alpha / 2), std::abs(single - nq)});
    const HamiltonianSchedule p = optimal_qubit_protocol(g, 1.0);
    worst_attain = std::max(worst_attain, std::abs(cost(p) - single));
    if (fidelity_up_to_phase(propagate(p).u_final, g) < 1 - 1e-9) worst_attain = 1.0;
  }
  const double elapsed = seconds_since(t0);
  return {worst_law <= 1e-9 && worst_attain <= 1e-9 && elapsed < 5.0,
          fmt("max|C-alpha/2|,|C-L/2|=%.1e max|C_protocol-C|=%.1e time=%.2fs", worst_law, worst_attain, elapsed)};
}

// 3
Outcome gate_bound_audit() {
  const auto t0 = Clock::now();
  SweepConfig c;
  c.trials = 1000;
  c.dims = {2, 4, 8};
  c.seed = 3003;
  c.max_segments = 32;
  c.states_per_trial = 10;
  c.bound_set = {"phase_volume_arc", "min_cost", "sandwich", "area", "state_cost"};
  const SweepSummary s = run_sweep(c);
  const double elapsed = seconds_since(t0);
  double min_slack = kInf;
  long checked = 0;
  for (const BoundTally& t : s.tallies) {
    min_slack = std::min(min_slack, t.min_slack);
    checked += t.checked;
  }
  const long violations = s.total_violations();
  return {violations == 0 && min_slack >= -1e-8 && elapsed < 60.0,
          fmt("checks=%.0f violations=%.0f min_slack=%.2e time=%.2fs", static_cast<double>(checked),
              static_cast<double>(violations), min_slack, elapsed)};
}

// 4
Outcome nonuniqueness_family() {
  const std::vector<ShapeFunction> shapes{ShapeFunction::constant(), ShapeFunction::triangular(64),
                                          ShapeFunction::sin2(64), ShapeFunction::bang(64)};
  double min_fid = 1.0;
  double max_dc = 0.0;
  for (const char* name : {"H", "CNOT"}) {
    const UnitaryGate g = named_gate(name);
    const double ref = cost(optimal_protocol(g, 1.0).schedule);
    for (const ShapeFunction& f : shapes) {
      ProtocolOptions opts;
      opts.shape = f;
      const HamiltonianSchedule s = optimal_protocol(g, 1.0, opts).schedule;
      min_fid = std::min(min_fid, fidelity_up_to_phase(propagate(s).u_final, g));
      max_dc = std::max(max_dc, std::abs(cost(s) - ref));
    }
  }
  return {min_fid >= 1 - 1e-8 && max_dc <= 1e-9, fmt("min fidelity=%.15f max|dC|=%.1e", min_fid, max_dc)};
}

// 5
Outcome lebesgue_bound() {
  Rng rng = trial_rng(5005, 0);
  std::uniform_real_distribution<double> tau(0.2, 4.0);
  double worst_eq = 0.0;
  for (const char* name : {"H", "CNOT", "T", "TOFFOLI"}) {
    const UnitaryGate g = named_gate(name);
    const double t = tau(rng);
    const HamiltonianSchedule s = optimal_protocol(g, t).schedule;
    const double half_l = arc_length(g) / 2.0;
    for (double p : {1.0, 2.0, 4.0}) {
      const double lhs = cost(s, MatrixNorm::op(), TimeNorm::lebesgue(p));
      worst_eq = std::max(worst_eq, std::abs(lhs - half_l * std::pow(t, (1 - p) / p)));
    }
  }
  for (int k = 0; k < 50; ++k) {
    const UnitaryGate g = haar_unitary(2 << (k % 3), rng);
    const double t = tau(rng);
    const HamiltonianSchedule s = optimal_protocol(g, t).schedule;
    const double half_l = arc_length(g) / 2.0;
    for (double p : {1.0, 2.0, 4.0}) {
      const double lhs = cost(s, MatrixNorm::op(), TimeNorm::lebesgue(p));
      worst_eq = std::max(worst_eq, std::abs(lhs - half_l * std::pow(t, (1 - p) / p)));
    }
  }
  const char* kinds[] = {"triangular", "sin2", "bang"};
  std::uniform_int_distribution<int> segs(2, 64);
  double min_slack = kInf;
  for (int k = 0; k < 200; ++k) {
    const UnitaryGate g = haar_unitary(2 << (k % 2), rng);
    ProtocolOptions opts;
    do {
      opts.shape = ShapeFunction::parse(std::string(kinds[k % 3]) + ":" + std::to_string(segs(rng)));
    } while (opts.shape->is_constant());
    const double t = tau(rng);
    const HamiltonianSchedule s = optimal_protocol(g, t, opts).schedule;
    const double half_l = arc_length(g) / 2.0;
    for (double p : {2.0, 4.0}) {
      const double lhs = cost(s, MatrixNorm::op(), TimeNorm::lebesgue(p));
      min_slack = std::min(min_slack, lhs - half_l * std::pow(t, (1 - p) / p));
    }
  }
  return {worst_eq <= 1e-9 && min_slack > 0.0,
          fmt("constant max|dC_p|=%.1e shaped min slack=%.3e (p=2,4)", worst_eq, min_slack)};
}

// 6
Outcome schatten_bound() {
  Rng rng = trial_rng(6006, 0);
  double worst_eq = 0.0;
  auto equality = [&](const UnitaryGate& g, double t) {
    ProtocolOptions opts;
    opts.exact_phase = true;
    const HamiltonianSchedule s = optimal_protocol(g, t, opts).schedule;
    const RealVector theta = unitary_spectrum(g).eigenphases;
    for (double p : {1.0, 2.0, kInf}) {
      const double lhs = cost(s, MatrixNorm::schatten(p), TimeNorm::l1());
      worst_eq = std::max(worst_eq, std::abs(lhs - vector_p_norm(theta, p)));
    }
  };
  for (const char* name : {"H", "CNOT", "T", "S", "TOFFOLI", "SWAP"}) equality(named_gate(name), 1.0);
  for (int k = 0; k < 50; ++k) equality(haar_unitary(2 << (k % 3), rng), 0.5 + k * 0.05);

  // random exact-phase protocols: shaped exact-phase syntheses and random schedules
  const char* kinds[] = {"triangular", "sin2", "bang"};
  double min_slack = kInf;
  for (int k = 0; k < 200; ++k) {
    const int d = 2 << (k % 3);
    HamiltonianSchedule s = [&] {
      if (k % 2 == 0) return random_schedule(d, rng, {32});
      ProtocolOptions opts;
      opts.exact_phase = true;
      opts.shape = ShapeFunction::parse(std::string(kinds[k % 3]) + ":16");
      return optimal_protocol(haar_unitary(d, rng), 1.0, opts).schedule;
    }();
    const RealVector theta = unitary_spectrum(propagate(s).u_final).eigenphases;
    for (double p : {1.0, 2.0, kInf}) {
      min_slack = std::min(min_slack, cost(s, MatrixNorm::schatten(p), TimeNorm::l1()) - vector_p_norm(theta, p));
    }
  }
  return {worst_eq <= 1e-9 && min_slack >= -1e-8,
          fmt("constant max|dC|=%.1e random min slack=%.2e", worst_eq, min_slack)};
}

// 7
Outcome identity_strip() {
  Rng rng = trial_rng(7007, 0);
  double min_fid = 1.0;
  double max_increase = -kInf;
  for (int k = 0; k < 500; ++k) {
    const HamiltonianSchedule s = random_schedule(2, rng);
    const StateVector psi = random_state(2, rng);
    const StrippedSchedule st = strip_identity_component(s);
    const StateVector a = *propagate(s, psi).psi_final;
    const StateVector b = *propagate(st.schedule, psi).psi_final;
    min_fid = std::min(min_fid, std::abs(a.dot(b)));
    max_increase = std::max(max_increase, cost(st.schedule) - cost(s));
  }
  return {1.0 - min_fid <= 1e-9 && max_increase <= 0.0,
          fmt("min |<psi|psi'>|=%.15f max(C_stripped-C)=%.3e", min_fid, max_increase)};
}

// 8
Outcome variable_axis() {
  Rng rng = trial_rng(8008, 0);
  std::uniform_real_distribution<double> angle(0.3, 1.4);
  std::uniform_real_distribution<double> dur(0.1, 1.0);
  double min_excess = kInf;
  for (int k = 0; k < 500; ++k) {
    std::array<double, 3> a = random_axis(rng);
    std::array<double, 3> b = random_axis(rng);
    while (std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) > std::cos(0.3)) b = random_axis(rng);
    std::vector<Segment> segs;
    for (const auto& n : {a, b}) {
      const double phi = angle(rng);
      const double dt = dur(rng);
      const double rate = phi / (2 * dt);
      segs.push_back({dt, pauli_matrix(0.0, {rate * n[0], rate * n[1], rate * n[2]})});
    }
    const HamiltonianSchedule s(segs);
    const UnitaryGate reached(propagate(s).u_final, 1e-8);
    min_excess = std::min(min_excess, rotation_path_length(s) - rotation_params(reached).angle);
  }
  double max_const = -kInf;
  const char* kinds[] = {"constant", "triangular:64", "sin2:64", "bang:64"};
  for (int k = 0; k < 200; ++k) {
    const UnitaryGate g = haar_unitary(2, rng);
    const HamiltonianSchedule s = optimal_qubit_protocol(g, 1.0 + 0.01 * k, ShapeFunction::parse(kinds[k % 4]));
    const UnitaryGate reached(propagate(s).u_final, 1e-8);
    max_const = std::max(max_const, std::abs(rotation_path_length(s) - rotation_params(reached).angle));
  }
  return {min_excess > 1e-6 && max_const <= 1e-9,
          fmt("variable-axis min excess=%.3e constant-axis max|excess|=%.1e", min_excess, max_const)};
}

// 9
Outcome worst_case_angle_identity() {
  Rng rng = trial_rng(9009, 0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const UnitaryGate g = haar_unitary(2, rng);
    worst = std::max(worst, std::abs(oracle::grid_max_bures_angle(g.matrix()) - rotation_params(g).angle / 2));
  }
  return {worst <= 1e-3, fmt("max|max_psi B - alpha/2|=%.2e over 100 gates", worst)};
}

// 10
Outcome arc_oracle() {
  std::vector<UnitaryGate> corpus;
  for (const char* name : {"I", "X", "Y", "Z", "H", "S", "T", "CNOT", "CZ", "SWAP", "TOFFOLI"}) {
    corpus.push_back(named_gate(name));
  }
  const std::vector<double> angles{0.1, 1.0, oracle::pi / 2, oracle::pi, 2.5};
  for (double a : angles) {
    for (const char* r : {"RX", "RY", "RZ"}) corpus.push_back(named_gate(r, std::vector<double>{a}));
  }
  Rng rng = trial_rng(10010, 0);
  for (int d = 2; d <= 8; ++d) {
    for (int k = 0; k < 200; ++k) corpus.push_back(haar_unitary(d, rng));
    // degenerate spectra on a pi/4 lattice in random bases
    std::uniform_int_distribution<int> lattice(-3, 4);
    for (int k = 0; k < 100; ++k) {
      Eigen::VectorXcd ph(d);
      for (int j = 0; j < d; ++j) ph(j) = std::exp(cplx(0, lattice(rng) * oracle::pi / 4));
      const Matrix v = haar_unitary(d, rng).matrix();
      corpus.emplace_back(v * ph.asDiagonal() * v.adjoint(), 1e-8);
    }
  }
  long mismatches = 0;
  for (const UnitaryGate& g : corpus) {
    const RealVector ph = unitary_spectrum(g).eigenphases;
    std::vector<double> phases(ph.data(), ph.data() + ph.size());
    if (shortest_covering_arc(phases).length != oracle::brute_force_arc(phases)) ++mismatches;
  }
  return {mismatches == 0,
          fmt("%.0f gates (d=2..8), %.0f mismatches", static_cast<double>(corpus.size()),
              static_cast<double>(mismatches))};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Hadamard golden case", hadamard_golden},
      {"single-qubit cost law", single_qubit_cost_law},
      {"gate bound audit", gate_bound_audit},
      {"nonuniqueness family", nonuniqueness_family},
      {"Lebesgue bound", lebesgue_bound},
      {"Schatten bound", schatten_bound},
      {"identity component stripping", identity_strip},
      {"variable-axis overshoot", variable_axis},
      {"worst-case angle identity", worst_case_angle_identity},
      {"arc oracle equivalence", arc_oracle},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2d %-30s %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
