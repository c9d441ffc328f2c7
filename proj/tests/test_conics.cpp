#include <doctest.h>

#include "billiards/conics.hpp"

#include <cmath>
#include <random>

using namespace billiards;

namespace {
const ConfocalFamily kFam(Rational(4), Rational(1));  // a = 2, b = 1
}

TEST_CASE("conic_of") {
  Conic e = conic_of(kFam, Cx(0));
  CHECK(e.a[0][0] == Cx(0.25));
  CHECK(e.a[1][1] == Cx(1.0));
  CHECK(e.a[2][2] == Cx(-1.0));

  Conic c1 = conic_of(kFam, Cx(1));
  CHECK(c1.a[0][0] == Cx(0.2));
  CHECK(c1.a[1][1] == Cx(0.5));

  CHECK_THROWS_AS(conic_of(kFam, Cx(-1)), degenerate_conic_error);
  CHECK_THROWS_AS(conic_of(kFam, Cx(-4)), degenerate_conic_error);
}

TEST_CASE("confocal family validation") {
  CHECK_THROWS_AS(ConfocalFamily(Rational(0), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(ConfocalFamily(Rational(4), Rational(-1)), std::invalid_argument);
  CHECK(ConfocalFamily(Rational(1), Rational(1)).is_circle());
}

TEST_CASE("foci") {
  auto f = foci(kFam);
  double c = std::sqrt(3.0);
  CHECK(std::abs(f[0].x() - Cx(c)) <= 1e-15);
  CHECK(std::abs(f[1].x() - Cx(-c)) <= 1e-15);
  CHECK(std::abs(f[2].y() - Cx(0, c)) <= 1e-15);
  CHECK(std::abs(f[3].y() - Cx(0, -c)) <= 1e-15);

  auto f21 = foci(ConfocalFamily(Rational(2), Rational(1)));
  CHECK(std::abs(f21[0].x() - Cx(1)) <= 1e-15);
  CHECK(std::abs(f21[2].y() - Cx(0, 1)) <= 1e-15);

  CHECK_THROWS_AS(foci(ConfocalFamily(Rational(1), Rational(1))), degenerate_conic_error);
}

TEST_CASE("isotropic tangency points") {
  auto pts = isotropic_tangency_points(kFam);
  double s = std::sqrt(3.0);
  CHECK(std::abs(pts[0].x() - Cx(4.0 / s)) <= 1e-14);
  CHECK(std::abs(pts[0].y() - Cx(0, 1.0 / s)) <= 1e-14);

  const Conic e = kFam.ellipse();
  for (const auto& p : pts) {
    CHECK(e.point_residual(p) <= 1e-12);
    ProjLine tangent = e.polar(p);
    bool on_i = incidence(tangent, cyclic_point_I()) <= 1e-10;
    bool on_j = incidence(tangent, cyclic_point_J()) <= 1e-10;
    CHECK(on_i != on_j);  // exactly one cyclic point
    CHECK(tangency_residual(tangent, e) <= 1e-12);
  }

  auto pts21 = isotropic_tangency_points(ConfocalFamily(Rational(2), Rational(1)));
  CHECK(std::abs(pts21[0].x() - Cx(2)) <= 1e-14);
  CHECK(std::abs(pts21[0].y() - Cx(0, 1)) <= 1e-14);
}

TEST_CASE("foci are intersections of non-parallel isotropic tangents") {
  auto pts = isotropic_tangency_points(kFam);
  const Conic e = kFam.ellipse();
  auto f = foci(kFam);
  int matched = 0;
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = i + 1; j < 4; ++j) {
      ProjLine ti = e.polar(pts[i]);
      ProjLine tj = e.polar(pts[j]);
      if (chordal(ti, tj) <= 1e-9) continue;  // parallel pair meets at infinity
      ProjPoint cross_point = meet(ti, tj);
      if (cross_point.is_infinite(1e-9)) continue;
      for (const auto& focus : f)
        if (chordal(cross_point, focus) <= 1e-10) ++matched;
    }
  }
  CHECK(matched == 4);  // each focus appears once
}

TEST_CASE("is_isotropic") {
  CHECK(is_isotropic(ProjLine(Cx(1), Cx(0, 1), Cx(0))));       // x + iy = 0
  CHECK_FALSE(is_isotropic(ProjLine(Cx(0), Cx(1), Cx(0))));    // y = 0
  CHECK(is_isotropic(ProjLine::infinity_line()));
}

TEST_CASE("tangency residual") {
  const Conic e = kFam.ellipse();
  // x = 2, vertical tangent at the vertex
  CHECK(tangency_residual(ProjLine(Cx(1), Cx(0), Cx(-2)), e) <= 1e-15);
  // a line through the center is a secant
  CHECK(tangency_residual(ProjLine(Cx(1), Cx(1), Cx(0)), e) > 1e-2);
  // side of the rhombus orbit, tangent to the caustic at lambda = -4/5
  ProjLine side = ProjLine::through(ProjPoint::affine(Cx(-2), Cx(0)), ProjPoint::affine(Cx(0), Cx(1)));
  CHECK(tangency_residual(side, conic_of(kFam, Cx(-0.8))) <= 1e-10);
  CHECK(tangency_residual(side, conic_of(kFam, Cx(0.8))) > 1e-2);
}

TEST_CASE("tangent lines through a point") {
  const Conic e = kFam.ellipse();
  SUBCASE("point on the conic gives the doubled tangent") {
    ProjPoint p = ProjPoint::affine(Cx(0), Cx(1));
    TangentLines t = tangent_lines_through(p, e);
    CHECK(t.doubled);
    CHECK(chordal(t.first, t.second) <= 1e-7);
    CHECK(tangency_residual(t.first, e) <= 1e-9);
    CHECK(incidence(t.first, p) <= 1e-9);
  }
  SUBCASE("vertex against the rhombus caustic: directions (+-a, +-b)") {
    Conic c2 = conic_of(kFam, Cx(-0.8));
    ProjPoint s = ProjPoint::affine(Cx(-2), Cx(0));
    TangentLines t = tangent_lines_through(s, c2);
    CHECK_FALSE(t.doubled);
    for (const ProjLine& l : {t.first, t.second}) {
      Direction d = l.direction();
      double m1 = direction_mismatch(d, Direction(Cx(2), Cx(1)));
      double m2 = direction_mismatch(d, Direction(Cx(2), Cx(-1)));
      CHECK(std::min(m1, m2) <= 1e-10);
      CHECK(incidence(l, s) <= 1e-12);
    }
  }
  SUBCASE("tangents from a focus are the isotropic lines") {
    auto f = foci(kFam);
    for (double lambda : {0.7, -0.3, 2.0}) {
      TangentLines t = tangent_lines_through(f[0], conic_of(kFam, Cx(lambda)));
      CHECK(is_isotropic(t.first, 1e-8));
      CHECK(is_isotropic(t.second, 1e-8));
    }
  }
  SUBCASE("random outside points: both tangents touch and pass through") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int trial = 0; trial < 30; ++trial) {
      ProjPoint p = ProjPoint::affine(Cx(coord(rng), coord(rng)), Cx(coord(rng), coord(rng)));
      Conic c = conic_of(kFam, Cx(0.5));
      if (c.point_residual(p) < 1e-3) continue;
      TangentLines t = tangent_lines_through(p, c);
      CHECK(tangency_residual(t.first, c) <= 1e-10);
      CHECK(tangency_residual(t.second, c) <= 1e-10);
      CHECK(incidence(t.first, p) <= 1e-10);
      CHECK(incidence(t.second, p) <= 1e-10);
    }
  }
}

TEST_CASE("conic line intersection") {
  const Conic e = kFam.ellipse();
  SUBCASE("major axis") {
    auto hit = conic_line_intersection(e, ProjLine(Cx(0), Cx(1), Cx(0)));
    CHECK_FALSE(hit.doubled);
    CHECK(std::abs(hit.first.x() - Cx(-2)) <= 1e-14);
    CHECK(std::abs(hit.second.x() - Cx(2)) <= 1e-14);
  }
  SUBCASE("tangent line gives a doubled point") {
    auto hit = conic_line_intersection(e, ProjLine(Cx(0), Cx(1), Cx(-1)));  // y = 1
    CHECK(hit.doubled);
    CHECK(chordal(hit.first, ProjPoint::affine(Cx(0), Cx(1))) <= 1e-7);
  }
  SUBCASE("complex secant through the self-reflecting vertex") {
    ProjPoint s = ProjPoint::affine(Cx(-2), Cx(0));
    ProjLine l = ProjLine::from_point_direction(s, Direction(Cx(2), Cx(0, std::sqrt(7.0))));
    auto hit = conic_line_intersection(e, l);
    ProjPoint n_minus = ProjPoint::affine(Cx(-8.0 / 3.0), Cx(0, -std::sqrt(7.0) / 3.0));
    double d1 = std::min(chordal(hit.first, s), chordal(hit.first, n_minus));
    double d2 = std::min(chordal(hit.second, s), chordal(hit.second, n_minus));
    CHECK(d1 <= 1e-10);
    CHECK(d2 <= 1e-10);
    CHECK(chordal(hit.first, hit.second) > 1e-3);
  }
  SUBCASE("random lines: intersections satisfy both equations") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
      ProjLine l(Cx(coord(rng), coord(rng)), Cx(coord(rng), coord(rng)), Cx(coord(rng), coord(rng)));
      auto hit = conic_line_intersection(e, l);
      for (const ProjPoint& p : {hit.first, hit.second}) {
        CHECK(e.point_residual(p) <= 1e-10);
        CHECK(incidence(l, p) <= 1e-10);
      }
    }
  }
}

TEST_CASE("common points of the ellipse and a confocal conic") {
  auto pts = common_points(kFam, Cx(1));
  // x^2 = 20/3, y^2 = -2/3
  for (const auto& p : pts) {
    CHECK(std::abs(p.x() * p.x() - Cx(20.0 / 3.0)) <= 1e-12);
    CHECK(std::abs(p.y() * p.y() - Cx(-2.0 / 3.0)) <= 1e-12);
    CHECK(kFam.ellipse().point_residual(p) <= 1e-12);
    CHECK(conic_of(kFam, Cx(1)).point_residual(p) <= 1e-12);
  }
  SUBCASE("tangent directions at common points are q-orthogonal") {
    const Conic e = kFam.ellipse();
    const Conic c = conic_of(kFam, Cx(1));
    for (const auto& p : pts) {
      Direction te = e.polar(p).direction();
      Direction tc = c.polar(p).direction();
      CHECK(std::abs(bilinear(te, tc)) <= 1e-10);
    }
  }
  CHECK_THROWS_AS(common_points(kFam, Cx(0)), degenerate_conic_error);
}

TEST_CASE("caustic parameter of a line") {
  SUBCASE("foci line is never tangent") {
    CHECK_THROWS_AS(caustic_parameter_of_line(kFam, ProjLine(Cx(0), Cx(1), Cx(0))),
                    focal_line_error);
  }
  SUBCASE("side of the rhombus orbit") {
    ProjLine side =
        ProjLine::through(ProjPoint::affine(Cx(-2), Cx(0)), ProjPoint::affine(Cx(0), Cx(1)));
    Cx lambda = caustic_parameter_of_line(kFam, side);
    CHECK(std::abs(lambda - Cx(-0.8)) <= 1e-12);
    CHECK(tangency_residual(side, conic_of(kFam, lambda)) <= 1e-12);
  }
  SUBCASE("tangent of the ellipse itself") {
    Cx lambda = caustic_parameter_of_line(kFam, ProjLine(Cx(1), Cx(0), Cx(-2)));
    CHECK(std::abs(lambda) <= 1e-12);
  }
  SUBCASE("isotropic line is rejected") {
    CHECK_THROWS_AS(caustic_parameter_of_line(kFam, ProjLine(Cx(1), Cx(0, 1), Cx(-0.5))),
                    isotropic_error);
  }
  SUBCASE("random lines: the returned conic is tangent") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    int checked = 0;
    while (checked < 30) {
      ProjLine l(Cx(coord(rng), coord(rng)), Cx(coord(rng), coord(rng)), Cx(coord(rng), coord(rng)));
      Cx lambda;
      try {
        lambda = caustic_parameter_of_line(kFam, l);
      } catch (const geometry_error&) {
        continue;
      }
      CHECK(tangency_residual(l, conic_of(kFam, lambda)) <= 1e-10);
      ++checked;
    }
  }
}

TEST_CASE("projective primitives") {
  ProjPoint p(Cx(0, 2), Cx(1), Cx(0));
  CHECK(std::abs(p.v[0] - Cx(1)) <= 1e-15);  // normalized by the largest coordinate
  CHECK(p.is_infinite());
  CHECK_THROWS_AS(p.x(), std::invalid_argument);
  CHECK_THROWS_AS(ProjPoint(Cx(0), Cx(0), Cx(0)), std::invalid_argument);

  ProjPoint q = ProjPoint::affine(Cx(3), Cx(-1));
  CHECK(chordal(q, q.antipode()) > 1e-3);
  CHECK(chordal(q.antipode(), ProjPoint::affine(Cx(-3), Cx(1))) <= 1e-15);

  ProjLine l = ProjLine::through(ProjPoint::affine(Cx(0), Cx(0)), ProjPoint::affine(Cx(1), Cx(1)));
  CHECK(incidence(l, ProjPoint::affine(Cx(0.5), Cx(0.5))) <= 1e-15);
  CHECK(direction_mismatch(l.direction(), Direction(Cx(1), Cx(1))) <= 1e-15);

  Direction iso(Cx(1), Cx(0, 1));
  CHECK(iso.isotropic());
  CHECK_FALSE(Direction(Cx(1), Cx(0)).isotropic());
}
