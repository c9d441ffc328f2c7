#ifndef BILLIARDS_BILLIARD_HPP
#define BILLIARDS_BILLIARD_HPP

#include <optional>
#include <string>
#include <vector>

#include "billiards/cayley.hpp"
#include "billiards/conics.hpp"

namespace billiards {

/// Reflection of a direction in a non-isotropic mirror direction:
///   v' = 2 b(v,t)/q(t) t - v,
/// the q-isometric involution fixing t and negating its q-orthogonal.
Direction reflect_direction(const Direction& v, const Direction& mirror);

struct IsotropicReflection {
  ProjLine line;
  bool indeterminate = false;  // incoming line equal to the mirror
};

/// Reflection of a line in an isotropic line through a finite common point:
/// the image is the mirror itself unless the incoming line is the mirror,
/// in which case every line through the point qualifies.
IsotropicReflection reflect_line_isotropic(const ProjLine& incoming, const ProjLine& mirror,
                                           double tol = kDefaultTol);

/// Squared Joachimsthal-type invariant at a finite point M of the ellipse
/// with a non-isotropic direction v:
///   P(M, v) = (x vx / a^2 + y vy / b^2)^2 / q(v).
Cx joachimsthal(const ConfocalFamily& fam, const ProjPoint& m, const Direction& v,
                double tol = kDefaultTol);

/// Caustic parameter from the invariant: lambda = -(ab)^2 P. Throws
/// focal_line_error for P at 1/a^2 or 1/b^2 (sides through a focus).
Cx lambda_from_invariant(const ConfocalFamily& fam, const Cx& p_value,
                         double tol = kDefaultTol);

struct OrbitTrace {
  Cx lambda;
  std::vector<ProjPoint> vertices;          // steps+1 entries; last = return point
  std::vector<ProjLine> sides;              // steps entries
  std::vector<Cx> invariants;               // P at each finite vertex / adjacent side
  std::vector<double> reflection_residuals; // interior vertices 1..steps-1
  std::vector<double> tangency_residuals;   // per side, against C_lambda
  double closure_residual = 0.0;
  std::vector<int> self_reflection_vertices;  // vertex on the caustic, doubled tangent
  std::vector<int> infinite_vertices;

  double invariant_spread() const;          // max pairwise |P_i - P_j|
  double lambda_consistency(const ConfocalFamily& fam) const;  // max |lambda + a^2 b^2 P_i|
  double max_reflection_residual() const;
  double max_tangency_residual() const;
};

/// Point (a cos theta, b sin theta) of the ellipse; theta may be complex.
ProjPoint ellipse_point(const ConfocalFamily& fam, const Cx& theta);

/// Traces `steps` sides of the billiard polygon tangent to C_lambda from a
/// start point of the ellipse. At every vertex the next side is the other
/// tangent line to the caustic; reflection in the ellipse tangent is recorded
/// as a residual rather than used for propagation. At an infinite vertex the
/// antipode rule (next = -previous) replaces the direction check.
OrbitTrace trace_orbit(const ConfocalFamily& fam, const Cx& lambda, const ProjPoint& start,
                       int branch, int steps, double tol = kDefaultTol);

/// Builds the trace record (sides, residuals, invariants, closure) for a
/// given closed vertex cycle; first and last vertex must coincide.
OrbitTrace trace_from_vertices(const ConfocalFamily& fam, const Cx& lambda,
                               const std::vector<ProjPoint>& vertices,
                               double tol = kDefaultTol);

struct SpecialQuads {
  std::vector<OrbitTrace> orbits;     // infinite-vertex, rhombus, self-reflecting
  std::vector<Rational> lambda_exact; // matching exact caustic parameters
  bool first_defined = true;          // false when a^2 = 2 b^2 kills the first caustic
  std::optional<std::string> degeneration_note;
};

/// The three distinguished 4-periodic orbits through the vertex (-a, 0):
///   (S, M+, S', M-) with M+- = (a : +-ib : 0),
///   (S, P, S', P')  with P = (0, b),
///   (S, N+, S, N-)  with N+- = (-a^3, +-i b sqrt(2a^2-b^2)) / (a^2-b^2).
SpecialQuads special_quad_orbits(const ConfocalFamily& fam, double tol = kDefaultTol);

struct DegenerateTriangle {
  ProjPoint alpha;        // isotropic tangency point of the ellipse
  ProjPoint beta;         // second vertex
  ProjLine side_isotropic;  // tangent to the ellipse at alpha, contains I or J
  ProjLine side_doubled;    // line alpha-beta, non-isotropic, tangent to the caustic
  int caustic_index;        // 0 or 1, into the triangular caustics
  Cx caustic_lambda;
};

/// The eight degenerate triangular configurations: one per (isotropic
/// tangency point, triangular caustic) pair.
std::vector<DegenerateTriangle> degenerate_triangles(const ConfocalFamily& fam,
                                                     double tol = kDefaultTol);

struct FocalReflection {
  double real_pair;     // incidence of the reflected line with the other real focus
  double complex_pair;  // same for the complex foci
};

/// Reflects the line M -> F1 in the ellipse tangent at M and measures
/// incidence with F2; likewise for the complex foci.
FocalReflection focal_reflection_check(const ConfocalFamily& fam, const ProjPoint& m,
                                       double tol = kDefaultTol);

}  // namespace billiards

#endif
