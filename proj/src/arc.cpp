#include "qslforge/arc.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qslforge/errors.hpp"
#include "qslforge/spectral.hpp"

namespace qslforge {

EigenphaseArc shortest_covering_arc(std::span<const double> phases) {
  if (phases.empty()) throw EmptyInput("shortest_covering_arc needs at least one phase");
  std::vector<double> s(phases.begin(), phases.end());
  std::sort(s.begin(), s.end());
  const std::size_t n = s.size();

  // Every candidate arc is the complement of one gap between neighbours.
  // Candidate 0 skips the wrap-around gap; candidate k >= 1 skips the gap
  // between s[k-1] and s[k].
  auto candidate = [&](std::size_t k) -> std::pair<double, double> {
    if (k == 0) return {s[n - 1] - s[0], s[0]};
    return {(s[k - 1] - s[k]) + kTwoPi, s[k]};
  };

  double length = candidate(0).first;
  for (std::size_t k = 1; k < n; ++k) length = std::min(length, candidate(k).first);

  double start = s[0];
  for (std::size_t k = 0; k < n; ++k) {
    const auto [len, st] = candidate(k);
    if (len <= length + kCoincidentPhaseTol) {
      start = st;
      break;
    }
  }
  if (length <= kCoincidentPhaseTol) length = 0.0;

  EigenphaseArc arc;
  arc.length = length;
  arc.start = start;
  arc.centering_phase = wrap_phase(-(start + 0.5 * length));
  return arc;
}

RealVector centered_phases(std::span<const double> phases, const EigenphaseArc& arc) {
  RealVector out(static_cast<Eigen::Index>(phases.size()));
  const double cut = 0.5 * (arc.length + kTwoPi);
  for (std::size_t k = 0; k < phases.size(); ++k) {
    double x = phases[k] - arc.start;
    x -= kTwoPi * std::floor(x / kTwoPi);
    if (x > cut) x -= kTwoPi;
    out(static_cast<Eigen::Index>(k)) = x - 0.5 * arc.length;
  }
  return out;
}

double arc_length(const UnitaryGate& g) {
  const UnitarySpectrum s = unitary_spectrum(g);
  return shortest_covering_arc({s.eigenphases.data(), static_cast<std::size_t>(s.eigenphases.size())})
      .length;
}

CenteredGate phase_center(const UnitaryGate& g) {
  const UnitarySpectrum s = unitary_spectrum(g);
  const EigenphaseArc arc =
      shortest_covering_arc({s.eigenphases.data(), static_cast<std::size_t>(s.eigenphases.size())});
  const double tol = std::max(kDefaultUnitarityTol, g.deviation());
  UnitaryGate centered(g.matrix() * std::polar(1.0, arc.centering_phase), tol);
  return {std::move(centered), arc.centering_phase, arc, s.eigenphases};
}

}  // namespace qslforge
