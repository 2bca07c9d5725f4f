#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "qslforge/errors.hpp"
#include "qslforge/gate.hpp"

namespace qslforge {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

Matrix permutation(int dim, std::initializer_list<std::pair<int, int>> swaps) {
  Matrix m = Matrix::Identity(dim, dim);
  for (auto [i, j] : swaps) m.row(i).swap(m.row(j));
  return m;
}

void expect_arity(std::string_view name, std::span<const double> params, std::size_t n) {
  if (params.size() != n) {
    throw BadParams(std::string(name) + " takes " + std::to_string(n) + " parameter(s), got " +
                    std::to_string(params.size()));
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw BadParams(std::string(name) + " parameter is not finite");
  }
}

}  // namespace

UnitaryGate named_gate(std::string_view name, std::span<const double> params) {
  const std::string id = upper(name);
  const cplx i{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);

  if (id == "RX" || id == "RY" || id == "RZ") {
    expect_arity(id, params, 1);
    const double c = std::cos(params[0] / 2.0);
    const double s = std::sin(params[0] / 2.0);
    if (id == "RX") {
      m << c, -i * s, -i * s, c;
    } else if (id == "RY") {
      m << c, -s, s, c;
    } else {
      m << std::polar(1.0, -params[0] / 2.0), 0.0, 0.0, std::polar(1.0, params[0] / 2.0);
    }
    return UnitaryGate(std::move(m));
  }

  expect_arity(id, params, 0);
  if (id == "I") {
    m = Matrix::Identity(2, 2);
  } else if (id == "X") {
    m << 0.0, 1.0, 1.0, 0.0;
  } else if (id == "Y") {
    m << 0.0, -i, i, 0.0;
  } else if (id == "Z") {
    m << 1.0, 0.0, 0.0, -1.0;
  } else if (id == "H") {
    m << r, r, r, -r;
  } else if (id == "S") {
    m << 1.0, 0.0, 0.0, i;
  } else if (id == "T") {
    m << 1.0, 0.0, 0.0, std::polar(1.0, kPi / 4.0);
  } else if (id == "CNOT" || id == "CX") {
    m = permutation(4, {{2, 3}});
  } else if (id == "CZ") {
    m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
  } else if (id == "SWAP") {
    m = permutation(4, {{1, 2}});
  } else if (id == "TOFFOLI" || id == "CCX") {
    m = permutation(8, {{6, 7}});
  } else {
    throw UnknownGate("unknown gate '" + std::string(name) + "'");
  }
  return UnitaryGate(std::move(m));
}

}  // namespace qslforge
