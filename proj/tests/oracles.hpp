// Independent test oracles: Sylvester-matrix resultants via fraction-free
// elimination and Sturm-sequence root counting. These deliberately avoid the
// library's subresultant PRS and Descartes isolation code paths.
#ifndef NRACOV_TESTS_ORACLES_HPP
#define NRACOV_TESTS_ORACLES_HPP

#include "nracov/poly.hpp"
#include "nracov/upoly.hpp"

namespace nracov::testing {

/// Resultant as the determinant of the Sylvester matrix (Bareiss).
Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, Var x);

/// Number of distinct real roots of p in (lo, hi].
int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi);
/// Number of distinct real roots of p on the whole line.
int sturm_count_all(const UPoly& p);

} // namespace nracov::testing

#endif
