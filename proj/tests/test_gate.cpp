#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "qslforge/errors.hpp"
#include "qslforge/gate.hpp"
#include "qslforge/io.hpp"
#include "qslforge/random.hpp"

using namespace qslforge;

namespace {

bool close(const Matrix& a, const Matrix& b, double tol) { return (a - b).cwiseAbs().maxCoeff() <= tol; }

}  // namespace

TEST_SUITE("gate") {

TEST_CASE("load_gate accepts the identity and the det-1 Hadamard") {
  std::istringstream id(R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})");
  const UnitaryGate g = load_gate(id);
  CHECK(g.dim() == 2);
  CHECK(close(g.matrix(), oracle::id(2), 0.0));

  const double r = 1.0 / std::sqrt(2.0);
  std::ostringstream text;
  text.precision(17);
  text << R"({"dim": 2, "matrix": [[[0,)" << -r << "],[0," << -r << "]],[[0," << -r << "],[0," << r
       << "]]]}";
  std::istringstream h(text.str());
  const UnitaryGate hg = load_gate(h);
  CHECK(close(hg.matrix(), oracle::hadamard_su2(), 1e-15));
}

TEST_CASE("load_gate rejects a non-unitary matrix") {
  std::istringstream bad(R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0],[2,0]]]})");
  CHECK_THROWS_AS(load_gate(bad), NotUnitary);
}

TEST_CASE("unitarity tolerance and projection") {
  Matrix m = oracle::hadamard();
  m(0, 0) += 5e-9;
  CHECK_THROWS_AS(UnitaryGate{m}, NotUnitary);
  const UnitaryGate p = UnitaryGate::projected(m);
  CHECK(unitarity_deviation(p.matrix()) < 1e-14);
  CHECK(close(p.matrix(), oracle::hadamard(), 1e-8));

  Matrix far = oracle::hadamard();
  far(0, 0) += 1e-6;
  CHECK_THROWS_AS(UnitaryGate::projected(far), NotUnitary);
  CHECK_NOTHROW(UnitaryGate(m, 1e-8));
}

TEST_CASE("shape and size checks") {
  CHECK_THROWS_AS(UnitaryGate(Matrix::Identity(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(UnitaryGate(Matrix::Identity(1, 1)), DimensionMismatch);
  Matrix nan = oracle::id(2);
  nan(0, 1) = cplx(std::nan(""), 0.0);
  CHECK_THROWS(UnitaryGate(nan));
}

TEST_CASE("named gates") {
  CHECK(close(named_gate("I").matrix(), oracle::id(2), 0.0));
  CHECK(close(named_gate("H").matrix(), oracle::hadamard(), 1e-16));
  CHECK(close(named_gate("h").matrix(), oracle::hadamard(), 1e-16));
  CHECK(close(named_gate("CNOT").matrix(), oracle::cnot(), 0.0));
  CHECK(close(named_gate("CX").matrix(), oracle::cnot(), 0.0));
  CHECK(close(named_gate("X").matrix(), oracle::sx(), 0.0));
  CHECK(close(named_gate("Y").matrix(), oracle::sy(), 0.0));
  CHECK(close(named_gate("Z").matrix(), oracle::sz(), 0.0));
  CHECK(named_gate("TOFFOLI").dim() == 8);
  CHECK(named_gate("SWAP").matrix()(1, 2) == cplx(1, 0));

  const double th = 0.73;
  const std::vector<double> p{th};
  CHECK(close(named_gate("RX", p).matrix(), oracle::pauli_exp(th / 2, {1, 0, 0}), 1e-15));
  CHECK(close(named_gate("RY", p).matrix(), oracle::pauli_exp(th / 2, {0, 1, 0}), 1e-15));
  CHECK(close(named_gate("RZ", p).matrix(), oracle::pauli_exp(th / 2, {0, 0, 1}), 1e-15));

  CHECK_THROWS_AS(named_gate("FOO"), UnknownGate);
  CHECK_THROWS_AS(named_gate("RX"), BadParams);
  CHECK_THROWS_AS(named_gate("H", p), BadParams);
}

TEST_CASE("su2_normalize examples") {
  const Su2Normalized idn = su2_normalize(named_gate("I"));
  CHECK(close(idn.gate.matrix(), oracle::id(2), 0.0));
  CHECK(idn.extracted_phase == doctest::Approx(0.0));

  const Su2Normalized h = su2_normalize(named_gate("H"));
  CHECK(close(h.gate.matrix(), oracle::hadamard_su2(), 1e-15));
  CHECK(h.extracted_phase == doctest::Approx(oracle::pi / 2).epsilon(1e-14));

  const Su2Normalized t = su2_normalize(named_gate("T"));
  Matrix expect = Matrix::Zero(2, 2);
  expect(0, 0) = std::exp(cplx(0, -oracle::pi / 8));
  expect(1, 1) = std::exp(cplx(0, oracle::pi / 8));
  CHECK(close(t.gate.matrix(), expect, 1e-15));
  CHECK(t.extracted_phase == doctest::Approx(oracle::pi / 8).epsilon(1e-14));
}

TEST_CASE("su2_normalize invariants on Haar gates") {
  Rng rng = trial_rng(7, 0);
  for (int k = 0; k < 200; ++k) {
    const UnitaryGate g = haar_unitary(2, rng);
    const Su2Normalized n = su2_normalize(g);
    const Matrix& m = n.gate.matrix();
    CHECK(std::abs(m.determinant() - cplx(1, 0)) < 1e-12);
    CHECK(m(0, 0).real() >= -1e-12);
    CHECK(close(std::exp(cplx(0, n.extracted_phase)) * m, g.matrix(), 1e-12));
    CHECK(n.extracted_phase > -oracle::pi);
    CHECK(n.extracted_phase <= oracle::pi);
  }
  CHECK_THROWS_AS(su2_normalize(named_gate("CNOT")), DimensionMismatch);
}

TEST_CASE("schedule validation") {
  CHECK_THROWS_AS(HamiltonianSchedule({}), InvalidSchedule);
  CHECK_THROWS_AS(HamiltonianSchedule({{0.0, oracle::sz()}}), InvalidSchedule);
  CHECK_THROWS_AS(HamiltonianSchedule({{-1.0, oracle::sz()}}), InvalidSchedule);
  CHECK_THROWS_AS(HamiltonianSchedule({{1.0, oracle::sz()}}, 0.0), InvalidSchedule);
  CHECK_THROWS_AS(HamiltonianSchedule({{1.0, oracle::sz()}, {1.0, oracle::id(4)}}), DimensionMismatch);
  Matrix nh = oracle::sz();
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(HamiltonianSchedule({{1.0, nh}}), NotHermitian);

  const HamiltonianSchedule s({{0.25, oracle::sz()}, {0.5, oracle::sx()}}, 2.0);
  CHECK(s.total_duration() == doctest::Approx(0.75));
  CHECK(s.size() == 2);
  CHECK(s.hbar() == 2.0);
  const HamiltonianSchedule z = HamiltonianSchedule::zero(4, 3.0);
  CHECK(z.dim() == 4);
  CHECK(z.segments().front().h.isZero());
}

TEST_CASE("shape functions") {
  for (const char* spec : {"constant", "triangular:64", "sin2:64", "bang:64", "triangular:7", "sin2:3"}) {
    const ShapeFunction f = ShapeFunction::parse(spec);
    double sum = 0.0;
    for (double v : f.samples()) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(sum / f.segments() == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK(ShapeFunction::parse("constant").segments() == 1);
  CHECK(ShapeFunction::parse("triangular").segments() == kDefaultShapeSegments);
  CHECK(ShapeFunction::parse("constant").is_constant());
  CHECK_FALSE(ShapeFunction::parse("bang:64").is_constant());
  CHECK(ShapeFunction::parse("sin2:2").is_constant());

  const ShapeFunction bang = ShapeFunction::bang(4);
  CHECK(bang.samples()[0] == doctest::Approx(2.0));
  CHECK(bang.samples()[3] == doctest::Approx(0.0));
  // f(x) = 4x on [0, 1/4] averages to 0.5
  CHECK(ShapeFunction::triangular(4).samples()[0] == doctest::Approx(0.5));

  CHECK_THROWS_AS(ShapeFunction::parse("square:4"), BadShape);
  CHECK_THROWS_AS(ShapeFunction::parse("sin2:0"), BadShape);
  CHECK_THROWS_AS(ShapeFunction::parse("sin2:x"), BadShape);
  CHECK_THROWS_AS(ShapeFunction({1.0, 2.0}), BadShape);
  CHECK_THROWS_AS(ShapeFunction({2.5, -0.5}), BadShape);
}

TEST_CASE("wrap_phase") {
  CHECK(wrap_phase(oracle::pi) == doctest::Approx(oracle::pi));
  CHECK(wrap_phase(-oracle::pi) == doctest::Approx(oracle::pi));
  CHECK(wrap_phase(3 * oracle::pi / 2) == doctest::Approx(-oracle::pi / 2));
  CHECK(wrap_phase(0.3) == doctest::Approx(0.3));
}

}
