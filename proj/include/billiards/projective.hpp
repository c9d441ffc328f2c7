#ifndef BILLIARDS_PROJECTIVE_HPP
#define BILLIARDS_PROJECTIVE_HPP

#include <array>
#include <complex>

namespace billiards {

using Cx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;       // relative residual threshold
inline constexpr double kConstructionTol = 1e-12; // exact-construction checks

bool finite_cx(const Cx& z);

/// Canonical homogeneous triple: scaled so the coordinate of largest modulus
/// equals 1. Shared by points and lines of the complex projective plane.
std::array<Cx, 3> normalize_triple(const std::array<Cx, 3>& v);

std::array<Cx, 3> cross3(const std::array<Cx, 3>& a, const std::array<Cx, 3>& b);

/// Direction of a line in the affine chart, up to complex scale.
struct Direction {
  Cx x, y;
  Direction(Cx vx, Cx vy);
  Cx q() const { return x * x + y * y; }          // q(v) = vx^2 + vy^2
  bool isotropic(double tol = kDefaultTol) const;
  Direction operator-() const { return Direction(-x, -y); }
};

Cx bilinear(const Direction& u, const Direction& v);

/// Scale-invariant separation of two directions; zero iff they agree in CP^1.
double direction_mismatch(const Direction& a, const Direction& b);

struct ProjPoint {
  std::array<Cx, 3> v;
  explicit ProjPoint(const std::array<Cx, 3>& coords);
  ProjPoint(Cx x, Cx y, Cx z) : ProjPoint(std::array<Cx, 3>{x, y, z}) {}

  static ProjPoint affine(Cx x, Cx y) { return ProjPoint(x, y, Cx(1)); }

  bool is_infinite(double tol = kDefaultTol) const;
  Cx x() const;  // affine coordinates; throws on infinite points
  Cx y() const;
  /// Central symmetry through the origin, (x:y:z) -> (-x:-y:z).
  ProjPoint antipode() const;
};

struct ProjLine {
  std::array<Cx, 3> w;  // line = { P : w0 x + w1 y + w2 z = 0 }
  explicit ProjLine(const std::array<Cx, 3>& coords);
  ProjLine(Cx w0, Cx w1, Cx w2) : ProjLine(std::array<Cx, 3>{w0, w1, w2}) {}

  static ProjLine through(const ProjPoint& p, const ProjPoint& q);
  static ProjLine from_point_direction(const ProjPoint& p, const Direction& d);
  static ProjLine infinity_line() { return ProjLine(Cx(0), Cx(0), Cx(1)); }

  Direction direction() const;  // (-w1, w0)
};

ProjPoint meet(const ProjLine& a, const ProjLine& b);

/// Chordal distance on CP^2: |u x v| / (|u||v|). Zero iff the two
/// triples are proportional.
double chordal(const ProjPoint& p, const ProjPoint& q);
double chordal(const ProjLine& a, const ProjLine& b);

/// Normalized incidence residual |w . p|.
double incidence(const ProjLine& l, const ProjPoint& p);

/// Deterministic ordering on canonical triples: lexicographic on
/// (re, im) per coordinate.
bool lex_less(const std::array<Cx, 3>& a, const std::array<Cx, 3>& b);

}  // namespace billiards

#endif
