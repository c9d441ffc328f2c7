#ifndef BILLIARDS_CONICS_HPP
#define BILLIARDS_CONICS_HPP

#include <array>
#include <complex>

#include "billiards/errors.hpp"
#include "billiards/projective.hpp"
#include "billiards/rational.hpp"

namespace billiards {

/// Conic { X : tX A X = 0 } as a symmetric 3x3 complex matrix.
struct Conic {
  std::array<std::array<Cx, 3>, 3> a;

  static Conic diagonal(Cx d0, Cx d1, Cx d2);

  Cx det() const;
  Conic adjugate() const;            // dual conic, up to the det factor
  Conic normalized() const;          // largest-modulus entry scaled to 1
  std::array<Cx, 3> apply(const std::array<Cx, 3>& x) const;

  /// Normalized equation residual |tP A P| at a canonical point.
  double point_residual(const ProjPoint& p) const;

  /// Polar line of a point; for p on the conic this is the tangent there.
  ProjLine polar(const ProjPoint& p) const;
};

/// The pair (a^2, b^2) generating the ellipse E (lambda = 0) and all
/// confocal conics C_lambda : x^2/(a^2+lambda) + y^2/(b^2+lambda) = 1.
struct ConfocalFamily {
  Rational a2, b2;
  double a2d, b2d;

  ConfocalFamily(const Rational& a_squared, const Rational& b_squared);

  bool is_circle() const { return a2 == b2; }
  Rational c2() const { return a2 - b2; }
  Conic ellipse() const;
};

inline const ProjPoint& cyclic_point_I() {
  static const ProjPoint p(Cx(1), Cx(0, 1), Cx(0));
  return p;
}
inline const ProjPoint& cyclic_point_J() {
  static const ProjPoint p(Cx(1), Cx(0, -1), Cx(0));
  return p;
}

/// diag(1/(a^2+lambda), 1/(b^2+lambda), -1); throws degenerate_conic_error
/// within kConstructionTol of lambda = -a^2 or -b^2.
Conic conic_of(const ConfocalFamily& fam, const Cx& lambda);

/// Real foci (+-c, 0) and complex foci (0, +-ic), c = principal sqrt(a^2-b^2).
/// Order: F1, F2, G1, G2. Throws degenerate_conic_error for a circle.
std::array<ProjPoint, 4> foci(const ConfocalFamily& fam);

/// The four points (+-a^2/sqrt(a^2-b^2), +-i b^2/sqrt(a^2-b^2)) where the
/// isotropic tangent lines touch the ellipse. Throws for a circle.
std::array<ProjPoint, 4> isotropic_tangency_points(const ConfocalFamily& fam);

/// True iff the line contains a cyclic point (the infinity line qualifies).
bool is_isotropic(const ProjLine& l, double tol = kDefaultTol);

/// Tangency residual |tw A^-1 w| with w and the dual matrix normalized to
/// unit scale; tangency <=> residual below tolerance.
double tangency_residual(const ProjLine& l, const Conic& c);

struct TangentLines {
  ProjLine first, second;  // deterministic order (lex on canonical coords)
  bool doubled = false;    // point on the conic: one tangent, multiplicity 2
};

/// Both tangent lines to a regular conic through a point.
TangentLines tangent_lines_through(const ProjPoint& p, const Conic& c);

struct ConicLineIntersection {
  ProjPoint first, second;
  bool doubled = false;  // tangency: coincident intersection points
};

ConicLineIntersection conic_line_intersection(const Conic& c, const ProjLine& l);

/// The four common points of E and C_lambda (lambda != 0):
///   x^2 = a^2(a^2+lambda)/(a^2-b^2),  y^2 = b^2(b^2+lambda)/(b^2-a^2).
std::array<ProjPoint, 4> common_points(const ConfocalFamily& fam, const Cx& lambda);

/// The unique lambda with C_lambda tangent to l, from
///   (a^2+s) w0^2 + (b^2+s) w1^2 - w2^2 = 0.
/// Throws isotropic_error when w0^2 + w1^2 vanishes and focal_line_error when
/// the solution lands on -a^2 or -b^2.
Cx caustic_parameter_of_line(const ConfocalFamily& fam, const ProjLine& l,
                             double tol = kDefaultTol);

}  // namespace billiards

#endif
