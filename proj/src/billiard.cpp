#include "billiards/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace billiards {

namespace {

Direction tangent_direction(const Conic& ellipse, const ProjPoint& m) {
  return ellipse.polar(m).direction();
}

// Fills invariants, reflection residuals and infinite-vertex markers for a
// trace whose vertices and sides are already in place.
void finalize_trace(const ConfocalFamily& fam, OrbitTrace& tr, double tol) {
  const Conic ellipse = fam.ellipse();
  const size_t nv = tr.vertices.size();
  for (size_t idx = 0; idx < nv; ++idx) {
    const ProjPoint& m = tr.vertices[idx];
    if (m.is_infinite(tol)) {
      tr.infinite_vertices.push_back(static_cast<int>(idx));
      continue;
    }
    if (idx >= 1) {
      Direction d = tr.sides[idx - 1].direction();
      if (!d.isotropic(tol)) tr.invariants.push_back(joachimsthal(fam, m, d, tol));
    }
    if (idx < tr.sides.size()) {
      Direction d = tr.sides[idx].direction();
      if (!d.isotropic(tol)) tr.invariants.push_back(joachimsthal(fam, m, d, tol));
    }
  }
  for (size_t idx = 1; idx + 1 < nv; ++idx) {
    const ProjPoint& m = tr.vertices[idx];
    double res;
    if (m.is_infinite(tol)) {
      // tangent at an infinite point of the ellipse passes through the
      // origin, so the outgoing vertex is the antipode of the incoming one
      res = chordal(tr.vertices[idx + 1], tr.vertices[idx - 1].antipode());
    } else {
      Direction t = tangent_direction(ellipse, m);
      if (t.isotropic(tol))
        throw isotropic_degeneration_error("reflection at an isotropic tangent of the ellipse");
      Direction reflected = reflect_direction(tr.sides[idx - 1].direction(), t);
      res = direction_mismatch(reflected, tr.sides[idx].direction());
    }
    tr.reflection_residuals.push_back(res);
  }
}

}  // namespace

Direction reflect_direction(const Direction& v, const Direction& mirror) {
  if (mirror.isotropic()) throw isotropic_error("reflect_direction: isotropic mirror");
  Cx factor = 2.0 * bilinear(v, mirror) / mirror.q();
  return Direction(factor * mirror.x - v.x, factor * mirror.y - v.y);
}

IsotropicReflection reflect_line_isotropic(const ProjLine& incoming, const ProjLine& mirror,
                                           double tol) {
  if (!is_isotropic(mirror, tol))
    throw std::invalid_argument("reflect_line_isotropic: mirror is not isotropic");
  ProjPoint base = meet(incoming, mirror);
  if (base.is_infinite(tol))
    throw std::invalid_argument("reflect_line_isotropic: common point must be finite");
  if (chordal(incoming, mirror) <= tol) return {mirror, true};
  return {mirror, false};
}

Cx joachimsthal(const ConfocalFamily& fam, const ProjPoint& m, const Direction& v, double tol) {
  if (v.isotropic(tol)) throw isotropic_error("joachimsthal: isotropic direction");
  if (m.is_infinite(tol)) throw std::invalid_argument("joachimsthal: infinite vertex");
  if (fam.ellipse().point_residual(m) > tol)
    throw std::invalid_argument("joachimsthal: point not on the ellipse");
  Cx s = m.x() * v.x / fam.a2d + m.y() * v.y / fam.b2d;
  return s * s / v.q();
}

Cx lambda_from_invariant(const ConfocalFamily& fam, const Cx& p_value, double tol) {
  double inv_a2 = 1.0 / fam.a2d;
  double inv_b2 = 1.0 / fam.b2d;
  double scale = std::max({std::abs(p_value), inv_a2, inv_b2});
  if (std::abs(p_value - Cx(inv_a2)) <= tol * scale || std::abs(p_value - Cx(inv_b2)) <= tol * scale)
    throw focal_line_error("lambda_from_invariant: invariant at a focal value");
  return -Cx(fam.a2d * fam.b2d) * p_value;
}

double OrbitTrace::invariant_spread() const {
  double spread = 0.0;
  for (size_t i = 0; i < invariants.size(); ++i)
    for (size_t j = i + 1; j < invariants.size(); ++j)
      spread = std::max(spread, std::abs(invariants[i] - invariants[j]));
  return spread;
}

double OrbitTrace::lambda_consistency(const ConfocalFamily& fam) const {
  double worst = 0.0;
  for (const auto& p : invariants)
    worst = std::max(worst, std::abs(lambda + Cx(fam.a2d * fam.b2d) * p));
  return worst;
}

double OrbitTrace::max_reflection_residual() const {
  double worst = 0.0;
  for (double r : reflection_residuals) worst = std::max(worst, r);
  return worst;
}

double OrbitTrace::max_tangency_residual() const {
  double worst = 0.0;
  for (double r : tangency_residuals) worst = std::max(worst, r);
  return worst;
}

ProjPoint ellipse_point(const ConfocalFamily& fam, const Cx& theta) {
  double a = std::sqrt(fam.a2d);
  double b = std::sqrt(fam.b2d);
  return ProjPoint::affine(a * std::cos(theta), b * std::sin(theta));
}

OrbitTrace trace_orbit(const ConfocalFamily& fam, const Cx& lambda, const ProjPoint& start,
                       int branch, int steps, double tol) {
  if (steps < 1) throw std::invalid_argument("trace_orbit: steps must be >= 1");
  if (branch != 0 && branch != 1) throw std::invalid_argument("trace_orbit: branch must be 0 or 1");
  const Conic ellipse = fam.ellipse();
  const Conic caustic = conic_of(fam, lambda);
  if (ellipse.point_residual(start) > tol)
    throw std::invalid_argument("trace_orbit: start point not on the ellipse");

  TangentLines first = tangent_lines_through(start, caustic);
  if (first.doubled) throw std::invalid_argument("trace_orbit: start point lies on the caustic");

  OrbitTrace tr;
  tr.lambda = lambda;
  tr.vertices.push_back(start);
  ProjLine side = (branch == 0) ? first.first : first.second;
  ProjPoint current = start;

  for (int k = 0; k < steps; ++k) {
    if (is_isotropic(side, tol))
      throw isotropic_degeneration_error("trace_orbit: isotropic side at an isotropic tangency point");
    tr.sides.push_back(side);
    tr.tangency_residuals.push_back(tangency_residual(side, caustic));

    ConicLineIntersection hit = conic_line_intersection(ellipse, side);
    ProjPoint next = (chordal(hit.first, current) >= chordal(hit.second, current)) ? hit.first
                                                                                   : hit.second;
    if (hit.doubled || chordal(next, current) <= tol)
      throw isotropic_degeneration_error("trace_orbit: side tangent to the ellipse");
    tr.vertices.push_back(next);

    if (k + 1 < steps) {
      TangentLines tn = tangent_lines_through(next, caustic);
      if (tn.doubled) {
        // vertex on the caustic: the side is the doubled tangent and the
        // trajectory continues along the same line
        tr.self_reflection_vertices.push_back(k + 1);
      } else {
        side = (chordal(tn.first, side) >= chordal(tn.second, side)) ? tn.first : tn.second;
      }
    }
    current = next;
  }
  tr.closure_residual = chordal(tr.vertices.back(), tr.vertices.front());
  finalize_trace(fam, tr, tol);
  return tr;
}

OrbitTrace trace_from_vertices(const ConfocalFamily& fam, const Cx& lambda,
                               const std::vector<ProjPoint>& vertices, double tol) {
  if (vertices.size() < 3) throw std::invalid_argument("trace_from_vertices: need a closed cycle");
  const Conic caustic = conic_of(fam, lambda);
  OrbitTrace tr;
  tr.lambda = lambda;
  tr.vertices = vertices;
  for (size_t k = 0; k + 1 < vertices.size(); ++k) {
    if (chordal(vertices[k], vertices[k + 1]) <= tol)
      throw std::invalid_argument("trace_from_vertices: consecutive vertices coincide");
    ProjLine side = ProjLine::through(vertices[k], vertices[k + 1]);
    tr.sides.push_back(side);
    tr.tangency_residuals.push_back(tangency_residual(side, caustic));
  }
  tr.closure_residual = chordal(tr.vertices.back(), tr.vertices.front());
  finalize_trace(fam, tr, tol);
  return tr;
}

SpecialQuads special_quad_orbits(const ConfocalFamily& fam, double tol) {
  if (fam.is_circle())
    throw degenerate_conic_error("special quads: undefined for a circle");
  const Rational A = fam.a2, B = fam.b2;
  const double a = std::sqrt(fam.a2d);
  const double b = std::sqrt(fam.b2d);
  const Rational lambda2 = -A * B / (A + B);
  const Rational lambda3 = A * B / (A - B);

  SpecialQuads out;
  const ProjPoint S = ProjPoint::affine(Cx(-a), Cx(0));
  const ProjPoint Sp = S.antipode();

  const bool first_degenerate = (A == 2 * B);
  out.first_defined = !first_degenerate;
  if (!first_degenerate) {
    const Rational lambda1 = -A * B / (A - B);
    ProjPoint m_plus(Cx(a), Cx(0, b), Cx(0));
    ProjPoint m_minus(Cx(a), Cx(0, -b), Cx(0));
    out.orbits.push_back(
        trace_from_vertices(fam, Cx(to_double(lambda1)), {S, m_plus, Sp, m_minus, S}, tol));
    out.lambda_exact.push_back(lambda1);
    double gap = std::abs(to_double(lambda1) + fam.a2d);
    if (gap <= tol * std::max(1.0, fam.a2d))
      out.degeneration_note = "lambda_1 within tolerance of -a^2: first caustic nearly degenerate";
  } else {
    out.degeneration_note = "a^2 = 2 b^2: lambda_1 = -a^2, first caustic undefined";
  }

  ProjPoint p = ProjPoint::affine(Cx(0), Cx(b));
  out.orbits.push_back(
      trace_from_vertices(fam, Cx(to_double(lambda2)), {S, p, Sp, p.antipode(), S}, tol));
  out.lambda_exact.push_back(lambda2);

  double c2 = fam.a2d - fam.b2d;
  Cx nx = Cx(-a * fam.a2d / c2);
  Cx ny = Cx(0, 1) * b * std::sqrt(Cx(2 * fam.a2d - fam.b2d, 0)) / c2;
  ProjPoint n_plus = ProjPoint::affine(nx, ny);
  ProjPoint n_minus = ProjPoint::affine(nx, -ny);
  out.orbits.push_back(
      trace_from_vertices(fam, Cx(to_double(lambda3)), {S, n_plus, S, n_minus, S}, tol));
  out.lambda_exact.push_back(lambda3);
  return out;
}

std::vector<DegenerateTriangle> degenerate_triangles(const ConfocalFamily& fam, double tol) {
  CausticSet triangles = caustic_roots(fam, 3, tol);
  if (triangles.roots.size() != 2)
    throw std::logic_error("degenerate_triangles: expected two triangular caustics");

  const Conic ellipse = fam.ellipse();
  std::vector<DegenerateTriangle> out;
  for (const ProjPoint& alpha : isotropic_tangency_points(fam)) {
    ProjLine iso_tangent = ellipse.polar(alpha);
    for (int j = 0; j < 2; ++j) {
      Cx lambda = triangles.roots[static_cast<size_t>(j)].lambda;
      Conic caustic = conic_of(fam, lambda);
      TangentLines tl = tangent_lines_through(alpha, caustic);
      // one tangent from alpha is the shared isotropic tangent line of the
      // whole family; the doubled side is the other one
      ProjLine side_b = (chordal(tl.first, iso_tangent) >= chordal(tl.second, iso_tangent))
                            ? tl.first
                            : tl.second;
      if (is_isotropic(side_b, tol))
        throw std::logic_error("degenerate_triangles: both tangents isotropic");
      ConicLineIntersection hit = conic_line_intersection(ellipse, side_b);
      ProjPoint beta = (chordal(hit.first, alpha) >= chordal(hit.second, alpha)) ? hit.first
                                                                                 : hit.second;
      out.push_back({alpha, beta, iso_tangent, side_b, j, lambda});
    }
  }
  return out;
}

FocalReflection focal_reflection_check(const ConfocalFamily& fam, const ProjPoint& m, double tol) {
  if (m.is_infinite(tol)) throw std::invalid_argument("focal_reflection_check: infinite point");
  if (fam.ellipse().point_residual(m) > tol)
    throw std::invalid_argument("focal_reflection_check: point not on the ellipse");
  Direction t = tangent_direction(fam.ellipse(), m);
  if (t.isotropic(tol))
    throw isotropic_error("focal_reflection_check: isotropic tangent at the point");

  auto f = foci(fam);
  auto reflected_incidence = [&](const ProjPoint& from, const ProjPoint& toward) {
    Direction v(from.x() - m.x(), from.y() - m.y());
    Direction r = reflect_direction(v, t);
    return incidence(ProjLine::from_point_direction(m, r), toward);
  };
  return FocalReflection{reflected_incidence(f[0], f[1]), reflected_incidence(f[2], f[3])};
}

}  // namespace billiards
