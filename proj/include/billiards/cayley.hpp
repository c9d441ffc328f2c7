#ifndef BILLIARDS_CAYLEY_HPP
#define BILLIARDS_CAYLEY_HPP

#include <vector>

#include "billiards/conics.hpp"
#include "billiards/polynomial.hpp"
#include "billiards/roots.hpp"
#include "billiards/series.hpp"

namespace billiards {

// The Cayley closure condition for an n-gon inscribed in the ellipse and
// circumscribed about C_lambda is the vanishing of a Hankel determinant in
// the Taylor coefficients B_k(lambda) of
//   g(t) = sqrt(((a^2+lambda)/a^2 t + 1) ((b^2+lambda)/b^2 t + 1) (t + 1)),
// taken over B_{i+j} (size m, n = 2m+1) or B_{i+j+1} (size m-1, n = 2m).
// Everything here is exact: a^2, b^2 rational, coefficients rational.

/// B_k(lambda) from the closed triple sum
///   sum_{u+v+w=k} c_u c_v c_w / (a^{2u} b^{2v}) (a^2+lambda)^u (b^2+lambda)^v.
Poly cayley_coefficient(const ConfocalFamily& fam, int k);

/// B_0..B_kmax from the series square root of the cubic; independent of the
/// triple-sum construction and used to cross-check it.
std::vector<Poly> cayley_coefficients_by_series(const ConfocalFamily& fam, int kmax);

struct CayleyTable {
  ConfocalFamily fam;
  int n;
  int m;                  // (n-1)/2 for odd n, n/2 for even n
  std::vector<Poly> b;    // b[k] = B_k, k = 0..kmax actually used
  Poly bn;                // the closure polynomial in lambda
};

/// Builds the closure polynomial for n >= 3.
CayleyTable cayley_polynomial(const ConfocalFamily& fam, int n);

struct DegreeReport {
  int degree;             // exact degree of the closure polynomial
  int expected_generic;   // (n^2-1)/4 odd / n^2/4 even; circle formulas for a = b
  int structural_bound;   // sharp determinant-structure bound: m(m+1) odd, m^2-1 even
  Rational leading;
  bool circle;
};

DegreeReport degree_report(const ConfocalFamily& fam, int n);
DegreeReport degree_report(const CayleyTable& table);

struct ForbiddenValues {
  Rational at_minus_a2;   // exact evaluation at lambda = -a^2
  Rational at_minus_b2;
};

ForbiddenValues forbidden_values(const ConfocalFamily& fam, int n);
ForbiddenValues forbidden_values(const CayleyTable& table);

struct CausticRoot {
  Cx lambda;
  int multiplicity = 1;
  bool admissible = true;  // simple and away from -a^2, -b^2
};

struct CausticSet {
  Poly polynomial;
  std::vector<CausticRoot> roots;  // sorted by (re, im)
  bool squarefree;                 // exact gcd verdict on the polynomial
  int admissible_count = 0;        // the N of the closure condition
};

/// Numeric roots of the exact closure polynomial with admissibility flags.
/// Simplicity is certified exactly through gcd(p, p'); the numeric clustering
/// is only consulted when the polynomial is not squarefree.
CausticSet caustic_roots(const ConfocalFamily& fam, int n, double tol = kDefaultTol);
CausticSet caustic_roots(const CayleyTable& table, double tol = kDefaultTol);

}  // namespace billiards

#endif
