#include "qslforge/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qslforge/bounds.hpp"
#include "qslforge/errors.hpp"
#include "qslforge/evolution.hpp"
#include "qslforge/synthesis.hpp"

namespace qslforge {

namespace fs = std::filesystem;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array()) throw ParseError("matrix row " + std::to_string(r) + " is not an array");
    if (row.size() != n) {
      throw DimensionMismatch("matrix row " + std::to_string(r) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be a [re, im] pair of numbers");
      }
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") is not finite");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cplx(re, im);
    }
  }
  return m;
}

json gate_to_json(const UnitaryGate& gate) {
  return {{"dim", gate.dim()}, {"matrix", matrix_to_json(gate.matrix())}};
}

UnitaryGate gate_from_json(const json& j, const GateLoadOptions& options) {
  if (!j.is_object()) throw ParseError("gate JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("gate JSON needs an integer \"dim\"");
  }
  if (!j.contains("matrix")) throw ParseError("gate JSON needs \"matrix\"");
  const auto dim = j["dim"].get<long long>();
  Matrix m = matrix_from_json(j["matrix"]);
  if (dim != m.rows()) {
    throw DimensionMismatch("gate declares dim " + std::to_string(dim) + " but matrix is " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return options.project ? UnitaryGate::projected(m, options.unitarity_tol)
                         : UnitaryGate(std::move(m), options.unitarity_tol);
}

namespace {

json parse_stream(std::istream& source) {
  try {
    return json::parse(source);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

UnitaryGate load_gate(std::istream& source, const GateLoadOptions& options) {
  return gate_from_json(parse_stream(source), options);
}

UnitaryGate load_gate_file(const fs::path& path, const GateLoadOptions& options) {
  std::ifstream in = open_input(path);
  return load_gate(in, options);
}

json schedule_to_json(const HamiltonianSchedule& schedule) {
  json segments = json::array();
  for (const Segment& s : schedule.segments()) {
    segments.push_back({{"duration", s.duration}, {"h", matrix_to_json(s.h)}});
  }
  return {{"hbar", schedule.hbar()}, {"segments", segments}};
}

HamiltonianSchedule schedule_from_json(const json& j, double hermiticity_tol) {
  if (!j.is_object()) throw ParseError("schedule JSON must be an object");
  double hbar = 1.0;
  if (j.contains("hbar")) {
    if (!j["hbar"].is_number()) throw ParseError("\"hbar\" must be a number");
    hbar = j["hbar"].get<double>();
  }
  if (!j.contains("segments") || !j["segments"].is_array()) {
    throw ParseError("schedule JSON needs a \"segments\" array");
  }
  std::vector<Segment> segments;
  for (const json& s : j["segments"]) {
    if (!s.is_object() || !s.contains("duration") || !s["duration"].is_number() ||
        !s.contains("h")) {
      throw ParseError("each segment needs a numeric \"duration\" and a matrix \"h\"");
    }
    segments.push_back({s["duration"].get<double>(), matrix_from_json(s["h"])});
  }
  return HamiltonianSchedule(std::move(segments), hbar, hermiticity_tol);
}

HamiltonianSchedule load_schedule(std::istream& source, double hermiticity_tol) {
  return schedule_from_json(parse_stream(source), hermiticity_tol);
}

HamiltonianSchedule load_schedule_file(const fs::path& path, double hermiticity_tol) {
  std::ifstream in = open_input(path);
  return load_schedule(in, hermiticity_tol);
}

json real_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

std::string p_label(double p) {
  if (std::isinf(p)) return "inf";
  if (p == std::floor(p) && std::abs(p) < 1e15) return std::to_string(static_cast<long long>(p));
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
  return std::string(buf, ptr);
}

std::vector<double> parse_p_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string item(text.substr(pos, comma - pos));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    double p = 0.0;
    if (item == "inf" || item == "infinity" || item == "Inf") {
      p = kInf;
    } else {
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
        throw BadP("cannot parse p value '" + item + "'");
      }
    }
    if (std::isnan(p) || p < 1.0) throw BadP("p must be >= 1, got '" + item + "'");
    out.push_back(p);
    pos = comma + 1;
  }
  return out;
}

json bound_report_to_json(const BoundReport& r) {
  return {{"bound", r.bound},
          {"lhs", real_to_json(r.lhs)},
          {"rhs", real_to_json(r.rhs)},
          {"slack", real_to_json(r.slack)},
          {"satisfied", r.satisfied}};
}

json cost_report_to_json(const CostReport& r) {
  json schatten = json::object();
  json lebesgue = json::object();
  for (const auto& [p, v] : r.c_schatten) schatten[p_label(p)] = real_to_json(v);
  for (const auto& [p, v] : r.c_lebesgue) lebesgue[p_label(p)] = real_to_json(v);
  return {{"tau", r.tau},
          {"C_opnorm", r.c_opnorm},
          {"A", r.phase_volume},
          {"C_schatten", schatten},
          {"C_lebesgue", lebesgue}};
}

json synthesis_metadata_to_json(const SynthesisResult& result) {
  return {{"min_cost", result.min_cost},
          {"arc_length", result.arc.length},
          {"centering_phase", result.centering_phase},
          {"exact_phase", result.exact_phase}};
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  const Eigen::Index d = trajectory.energies.empty() ? 0 : trajectory.energies.front().size();
  out << "t";
  for (Eigen::Index k = 0; k < d; ++k) out << ",E_" << k;
  out << '\n';
  out << std::setprecision(17);
  for (std::size_t r = 0; r < trajectory.t.size(); ++r) {
    out << trajectory.t[r];
    for (Eigen::Index k = 0; k < d; ++k) out << ',' << trajectory.energies[r](k);
    out << '\n';
  }
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ParseError("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw ParseError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace qslforge
