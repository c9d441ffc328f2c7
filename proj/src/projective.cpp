#include "billiards/projective.hpp"

#include <cmath>
#include <stdexcept>

namespace billiards {

bool finite_cx(const Cx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace {

double norm2(const std::array<Cx, 3>& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

void require_valid(const std::array<Cx, 3>& v, const char* what) {
  double mag = 0.0;
  for (const auto& z : v) {
    if (!finite_cx(z)) throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    mag = std::max(mag, std::abs(z));
  }
  if (mag == 0.0) throw std::invalid_argument(std::string(what) + ": zero triple");
}

}  // namespace

std::array<Cx, 3> normalize_triple(const std::array<Cx, 3>& v) {
  int best = 0;
  double best_mag = std::abs(v[0]);
  for (int i = 1; i < 3; ++i) {
    double m = std::abs(v[static_cast<size_t>(i)]);
    if (m > best_mag) {
      best_mag = m;
      best = i;
    }
  }
  Cx pivot = v[static_cast<size_t>(best)];
  return {v[0] / pivot, v[1] / pivot, v[2] / pivot};
}

std::array<Cx, 3> cross3(const std::array<Cx, 3>& a, const std::array<Cx, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Direction::Direction(Cx vx, Cx vy) : x(vx), y(vy) {
  if (!finite_cx(vx) || !finite_cx(vy)) throw std::invalid_argument("direction: non-finite");
  double m = std::max(std::abs(x), std::abs(y));
  if (m == 0.0) throw std::invalid_argument("direction: zero vector");
  x /= m;
  y /= m;
}

bool Direction::isotropic(double tol) const {
  return std::abs(q()) <= tol * (std::norm(x) + std::norm(y));
}

Cx bilinear(const Direction& u, const Direction& v) { return u.x * v.x + u.y * v.y; }

double direction_mismatch(const Direction& a, const Direction& b) {
  double na = std::sqrt(std::norm(a.x) + std::norm(a.y));
  double nb = std::sqrt(std::norm(b.x) + std::norm(b.y));
  return std::abs(a.x * b.y - a.y * b.x) / (na * nb);
}

ProjPoint::ProjPoint(const std::array<Cx, 3>& coords) : v(coords) {
  require_valid(coords, "projective point");
  v = normalize_triple(v);
}

bool ProjPoint::is_infinite(double tol) const { return std::abs(v[2]) <= tol; }

Cx ProjPoint::x() const {
  if (is_infinite(kConstructionTol)) throw std::invalid_argument("affine coordinate of an infinite point");
  return v[0] / v[2];
}

Cx ProjPoint::y() const {
  if (is_infinite(kConstructionTol)) throw std::invalid_argument("affine coordinate of an infinite point");
  return v[1] / v[2];
}

ProjPoint ProjPoint::antipode() const { return ProjPoint(-v[0], -v[1], v[2]); }

ProjLine::ProjLine(const std::array<Cx, 3>& coords) : w(coords) {
  require_valid(coords, "projective line");
  w = normalize_triple(w);
}

ProjLine ProjLine::through(const ProjPoint& p, const ProjPoint& q) {
  return ProjLine(cross3(p.v, q.v));
}

ProjLine ProjLine::from_point_direction(const ProjPoint& p, const Direction& d) {
  return ProjLine(cross3(p.v, {d.x, d.y, Cx(0)}));
}

Direction ProjLine::direction() const { return Direction(-w[1], w[0]); }

ProjPoint meet(const ProjLine& a, const ProjLine& b) { return ProjPoint(cross3(a.w, b.w)); }

double chordal(const ProjPoint& p, const ProjPoint& q) {
  return norm2(cross3(p.v, q.v)) / (norm2(p.v) * norm2(q.v));
}

double chordal(const ProjLine& a, const ProjLine& b) {
  return norm2(cross3(a.w, b.w)) / (norm2(a.w) * norm2(b.w));
}

double incidence(const ProjLine& l, const ProjPoint& p) {
  Cx dot = l.w[0] * p.v[0] + l.w[1] * p.v[1] + l.w[2] * p.v[2];
  return std::abs(dot) / (norm2(l.w) * norm2(p.v));
}

bool lex_less(const std::array<Cx, 3>& a, const std::array<Cx, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    const auto& za = a[static_cast<size_t>(i)];
    const auto& zb = b[static_cast<size_t>(i)];
    if (za.real() != zb.real()) return za.real() < zb.real();
    if (za.imag() != zb.imag()) return za.imag() < zb.imag();
  }
  return false;
}

}  // namespace billiards
