#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qslforge/gate.hpp"

namespace qslforge {

using json = nlohmann::json;

struct BoundReport;
struct CostReport;
struct SynthesisResult;
struct Trajectory;

// Matrices are row-major arrays of rows, each entry a [re, im] pair.
json matrix_to_json(const Matrix& m);
/// Throws ParseError on malformed input and DimensionMismatch on ragged or
/// non-square data.
Matrix matrix_from_json(const json& j);

struct GateLoadOptions {
  double unitarity_tol = kDefaultUnitarityTol;
  /// Polar-project gates that miss unitarity by at most 10x the tolerance.
  bool project = false;
};

/// {"dim": d, "matrix": [[[re, im], ...], ...]}
json gate_to_json(const UnitaryGate& gate);
UnitaryGate gate_from_json(const json& j, const GateLoadOptions& options = {});
UnitaryGate load_gate(std::istream& source, const GateLoadOptions& options = {});
UnitaryGate load_gate_file(const std::filesystem::path& path, const GateLoadOptions& options = {});

/// {"hbar": h, "segments": [{"duration": t, "h": matrix}, ...]}
json schedule_to_json(const HamiltonianSchedule& schedule);
HamiltonianSchedule schedule_from_json(const json& j,
                                       double hermiticity_tol = kDefaultHermiticityTol);
HamiltonianSchedule load_schedule(std::istream& source,
                                  double hermiticity_tol = kDefaultHermiticityTol);
HamiltonianSchedule load_schedule_file(const std::filesystem::path& path,
                                       double hermiticity_tol = kDefaultHermiticityTol);

/// Finite values as numbers; infinities as the strings "inf" / "-inf".
json real_to_json(double x);
/// p-norm label used as a JSON key: "1", "2", "inf", or the shortest decimal.
std::string p_label(double p);
/// Parses "1,2,inf" style lists. Throws BadP for entries below 1.
std::vector<double> parse_p_list(std::string_view text);

json bound_report_to_json(const BoundReport& report);
json cost_report_to_json(const CostReport& report);
/// {"min_cost": c, "arc_length": L, "centering_phase": phi, "exact_phase": bool}
json synthesis_metadata_to_json(const SynthesisResult& result);

/// Header `t,E_0,...,E_{d-1}` then one row per grid point.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace qslforge
