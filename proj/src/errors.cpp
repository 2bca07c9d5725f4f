#include "qslforge/errors.hpp"

#include <sstream>

namespace qslforge {

namespace {

std::string describe(const char* what, double deviation, double tolerance) {
  std::ostringstream os;
  os.precision(6);
  os << what << ": deviation " << deviation << " exceeds tolerance " << tolerance;
  return os.str();
}

}  // namespace

NotUnitary::NotUnitary(double deviation, double tolerance)
    : Error(describe("matrix is not unitary (||G^dag G - I||_F)", deviation, tolerance)),
      deviation_(deviation) {}

NotHermitian::NotHermitian(double deviation, double tolerance)
    : Error(describe("matrix is not Hermitian (||H - H^dag||_F)", deviation, tolerance)),
      deviation_(deviation) {}

}  // namespace qslforge
