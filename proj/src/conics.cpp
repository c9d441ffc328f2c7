#include "billiards/conics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace billiards {

namespace {

double max_entry(const std::array<std::array<Cx, 3>, 3>& m) {
  double best = 0.0;
  for (const auto& row : m)
    for (const auto& z : row) best = std::max(best, std::abs(z));
  return best;
}

Cx dot(const std::array<Cx, 3>& a, const std::array<Cx, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Two spanning triples orthogonal (bilinearly) to p: rows of p x e_k with the
// largest norms that are actually independent.
std::pair<std::array<Cx, 3>, std::array<Cx, 3>> spanning_pair(const std::array<Cx, 3>& p) {
  std::array<std::array<Cx, 3>, 3> cand;
  std::array<double, 3> mag{};
  for (int k = 0; k < 3; ++k) {
    std::array<Cx, 3> e{Cx(0), Cx(0), Cx(0)};
    e[static_cast<size_t>(k)] = Cx(1);
    cand[static_cast<size_t>(k)] = cross3(p, e);
    const auto& c = cand[static_cast<size_t>(k)];
    mag[static_cast<size_t>(k)] = std::sqrt(std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]));
  }
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return mag[static_cast<size_t>(a)] > mag[static_cast<size_t>(b)]; });
  const auto& first = cand[static_cast<size_t>(order[0])];
  for (int i = 1; i < 3; ++i) {
    const auto& second = cand[static_cast<size_t>(order[static_cast<size_t>(i)])];
    auto cr = cross3(first, second);
    double indep = std::sqrt(std::norm(cr[0]) + std::norm(cr[1]) + std::norm(cr[2]));
    if (indep > 1e-12 * mag[static_cast<size_t>(order[0])] * mag[static_cast<size_t>(order[static_cast<size_t>(i)])])
      return {first, second};
  }
  throw std::logic_error("spanning_pair: degenerate input");
}

struct QuadraticRoots {
  std::array<Cx, 2> first, second;  // projective (s : t) pairs
  bool doubled = false;
};

// Roots of alpha s^2 + 2 beta s t + gamma t^2 = 0 in (s : t), stable choice of
// the quadratic-formula branch.
QuadraticRoots solve_pencil_quadratic(const Cx& alpha, const Cx& beta, const Cx& gamma) {
  double scale = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
  if (scale == 0.0) throw std::logic_error("pencil quadratic vanishes identically");
  if (std::max(std::abs(alpha), std::abs(gamma)) <= 1e-14 * std::abs(beta)) {
    return {{Cx(1), Cx(0)}, {Cx(0), Cx(1)}, false};
  }
  Cx disc = beta * beta - alpha * gamma;
  Cx sq = std::sqrt(disc);
  Cx plus = -beta + sq, minus = -beta - sq;
  Cx big = (std::abs(minus) >= std::abs(plus)) ? minus : plus;
  bool doubled = std::abs(disc) <= 1e-12 * (std::abs(beta) * std::abs(beta) + std::abs(alpha) * std::abs(gamma));
  if (std::abs(big) <= 1e-14 * scale) {
    if (std::abs(alpha) >= std::abs(gamma)) return {{Cx(0), Cx(1)}, {Cx(0), Cx(1)}, true};
    return {{Cx(1), Cx(0)}, {Cx(1), Cx(0)}, true};
  }
  return {{big, alpha}, {gamma, big}, doubled};
}

std::array<Cx, 3> combine(const std::array<Cx, 3>& u, const std::array<Cx, 3>& v,
                          const std::array<Cx, 2>& st) {
  return {st[0] * u[0] + st[1] * v[0], st[0] * u[1] + st[1] * v[1], st[0] * u[2] + st[1] * v[2]};
}

}  // namespace

Conic Conic::diagonal(Cx d0, Cx d1, Cx d2) {
  Conic c{};
  c.a = {{{d0, Cx(0), Cx(0)}, {Cx(0), d1, Cx(0)}, {Cx(0), Cx(0), d2}}};
  return c;
}

Cx Conic::det() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Conic Conic::adjugate() const {
  Conic out{};
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return a[static_cast<size_t>(r0)][static_cast<size_t>(c0)] * a[static_cast<size_t>(r1)][static_cast<size_t>(c1)] -
           a[static_cast<size_t>(r0)][static_cast<size_t>(c1)] * a[static_cast<size_t>(r1)][static_cast<size_t>(c0)];
  };
  out.a[0][0] = minor(1, 2, 1, 2);
  out.a[0][1] = -minor(1, 2, 0, 2);
  out.a[0][2] = minor(1, 2, 0, 1);
  out.a[1][0] = -minor(0, 2, 1, 2);
  out.a[1][1] = minor(0, 2, 0, 2);
  out.a[1][2] = -minor(0, 2, 0, 1);
  out.a[2][0] = minor(0, 1, 1, 2);
  out.a[2][1] = -minor(0, 1, 0, 2);
  out.a[2][2] = minor(0, 1, 0, 1);
  // transpose of the cofactor matrix; symmetric input keeps it symmetric
  return out;
}

Conic Conic::normalized() const {
  double m = max_entry(a);
  if (m == 0.0) throw std::invalid_argument("zero conic matrix");
  Conic out = *this;
  for (auto& row : out.a)
    for (auto& z : row) z /= m;
  return out;
}

std::array<Cx, 3> Conic::apply(const std::array<Cx, 3>& x) const {
  return {dot(a[0], x), dot(a[1], x), dot(a[2], x)};
}

double Conic::point_residual(const ProjPoint& p) const {
  Conic n = normalized();
  return std::abs(dot(n.apply(p.v), p.v));
}

ProjLine Conic::polar(const ProjPoint& p) const {
  return ProjLine(normalized().apply(p.v));
}

ConfocalFamily::ConfocalFamily(const Rational& a_squared, const Rational& b_squared)
    : a2(a_squared), b2(b_squared), a2d(to_double(a_squared)), b2d(to_double(b_squared)) {
  if (a2 <= 0 || b2 <= 0) throw std::invalid_argument("confocal family: a^2 and b^2 must be positive");
}

Conic ConfocalFamily::ellipse() const {
  return Conic::diagonal(Cx(1.0 / a2d), Cx(1.0 / b2d), Cx(-1.0));
}

Conic conic_of(const ConfocalFamily& fam, const Cx& lambda) {
  if (!finite_cx(lambda)) throw std::invalid_argument("conic_of: non-finite lambda");
  double scale = std::max({1.0, std::abs(lambda), fam.a2d, fam.b2d});
  Cx da = Cx(fam.a2d) + lambda;
  Cx db = Cx(fam.b2d) + lambda;
  if (std::abs(da) <= kConstructionTol * scale || std::abs(db) <= kConstructionTol * scale)
    throw degenerate_conic_error("conic_of: lambda at a degenerate value of the family");
  return Conic::diagonal(1.0 / da, 1.0 / db, Cx(-1.0));
}

std::array<ProjPoint, 4> foci(const ConfocalFamily& fam) {
  if (fam.is_circle()) throw degenerate_conic_error("foci: undefined for a circle");
  Cx c = std::sqrt(Cx(to_double(fam.c2()), 0.0));
  return {ProjPoint::affine(c, Cx(0)), ProjPoint::affine(-c, Cx(0)),
          ProjPoint::affine(Cx(0), Cx(0, 1) * c), ProjPoint::affine(Cx(0), -Cx(0, 1) * c)};
}

std::array<ProjPoint, 4> isotropic_tangency_points(const ConfocalFamily& fam) {
  if (fam.is_circle()) throw degenerate_conic_error("isotropic tangency points: undefined for a circle");
  Cx s = std::sqrt(Cx(to_double(fam.c2()), 0.0));
  Cx px = Cx(fam.a2d) / s;
  Cx py = Cx(0, 1) * Cx(fam.b2d) / s;
  return {ProjPoint::affine(px, py), ProjPoint::affine(px, -py),
          ProjPoint::affine(-px, py), ProjPoint::affine(-px, -py)};
}

bool is_isotropic(const ProjLine& l, double tol) {
  return incidence(l, cyclic_point_I()) <= tol || incidence(l, cyclic_point_J()) <= tol;
}

double tangency_residual(const ProjLine& l, const Conic& c) {
  Conic n = c.normalized();
  double dscale = std::pow(max_entry(n.a), 3);
  if (std::abs(n.det()) <= 1e-14 * dscale)
    throw degenerate_conic_error("tangency_residual: singular conic");
  Conic dual = n.adjugate().normalized();
  return std::abs(dot(dual.apply(l.w), l.w));
}

TangentLines tangent_lines_through(const ProjPoint& p, const Conic& c) {
  Conic dual = c.normalized().adjugate().normalized();
  auto [u, v] = spanning_pair(p.v);
  Cx alpha = dot(dual.apply(u), u);
  Cx beta = dot(dual.apply(u), v);
  Cx gamma = dot(dual.apply(v), v);
  QuadraticRoots roots = solve_pencil_quadratic(alpha, beta, gamma);
  ProjLine l1(combine(u, v, roots.first));
  ProjLine l2(combine(u, v, roots.second));
  TangentLines out{l1, l2, roots.doubled};
  if (lex_less(l2.w, l1.w)) std::swap(out.first, out.second);
  return out;
}

ConicLineIntersection conic_line_intersection(const Conic& c, const ProjLine& l) {
  Conic n = c.normalized();
  auto [u, v] = spanning_pair(l.w);  // two points on the line
  Cx alpha = dot(n.apply(u), u);
  Cx beta = dot(n.apply(u), v);
  Cx gamma = dot(n.apply(v), v);
  QuadraticRoots roots = solve_pencil_quadratic(alpha, beta, gamma);
  ProjPoint p1(combine(u, v, roots.first));
  ProjPoint p2(combine(u, v, roots.second));
  ConicLineIntersection out{p1, p2, roots.doubled};
  if (lex_less(p2.v, p1.v)) std::swap(out.first, out.second);
  return out;
}

std::array<ProjPoint, 4> common_points(const ConfocalFamily& fam, const Cx& lambda) {
  if (fam.is_circle()) throw degenerate_conic_error("common points: undefined for a circle");
  double scale = std::max({1.0, std::abs(lambda), fam.a2d, fam.b2d});
  if (std::abs(lambda) <= kConstructionTol * scale)
    throw degenerate_conic_error("common points: lambda = 0 gives the ellipse itself");
  conic_of(fam, lambda);  // validates lambda against -a^2, -b^2
  double c2 = to_double(fam.c2());
  Cx x2 = Cx(fam.a2d) * (Cx(fam.a2d) + lambda) / c2;
  Cx y2 = Cx(fam.b2d) * (Cx(fam.b2d) + lambda) / (-c2);
  Cx sx = std::sqrt(x2);
  Cx sy = std::sqrt(y2);
  return {ProjPoint::affine(sx, sy), ProjPoint::affine(sx, -sy),
          ProjPoint::affine(-sx, sy), ProjPoint::affine(-sx, -sy)};
}

Cx caustic_parameter_of_line(const ConfocalFamily& fam, const ProjLine& l, double tol) {
  const auto& w = l.w;  // canonical
  Cx d = w[0] * w[0] + w[1] * w[1];
  double wmag = std::norm(w[0]) + std::norm(w[1]);
  if (std::abs(d) <= tol * std::max(wmag, kConstructionTol))
    throw isotropic_error("caustic parameter: isotropic line");
  Cx s = (w[2] * w[2] - Cx(fam.a2d) * w[0] * w[0] - Cx(fam.b2d) * w[1] * w[1]) / d;
  double scale = std::max({1.0, std::abs(s), fam.a2d, fam.b2d});
  if (std::abs(s + Cx(fam.a2d)) <= tol * scale || std::abs(s + Cx(fam.b2d)) <= tol * scale)
    throw focal_line_error("caustic parameter: line through a focus");
  return s;
}

}  // namespace billiards
