#include "billiards/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "billiards/hankel.hpp"

namespace billiards {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Cell {
  std::string name;
  std::ostringstream detail;
  bool pass = true;
  Clock::time_point start = Clock::now();

  explicit Cell(std::string n) : name(std::move(n)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }

  CheckResult done() { return CheckResult{name, pass, detail.str(), elapsed_ms(start)}; }
};

Rational random_rational(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi) {
  std::uniform_int_distribution<int> num(num_lo, num_hi);
  std::uniform_int_distribution<int> den(1, den_hi);
  return Rational(num(rng), den(rng));
}

// closed quadratic for n = 3 and closed cubic for n = 4, exact in (a^2, b^2)
Poly closed_form_n3(const Rational& A, const Rational& B) {
  Rational a2b2 = A * B;
  Rational diff = A - B;
  return Poly(std::vector<Rational>{
      Rational(3, 8),
      (A + B) / (4 * a2b2),
      -(diff * diff) / (8 * a2b2 * a2b2),
  });
}

Poly closed_form_n4(const Rational& A, const Rational& B) {
  Rational a2b2 = A * B;
  Rational diff = A - B;
  return Poly(std::vector<Rational>{
      Rational(-1, 16),
      -(A + B) / (16 * a2b2),
      (diff * diff) / (16 * a2b2 * a2b2),
      (diff * diff * (A + B)) / (16 * a2b2 * a2b2 * a2b2),
  });
}

}  // namespace

CheckResult check_algebra_identities(std::uint64_t seed) {
  Cell cell("algebra_identities");
  std::mt19937_64 rng(seed);

  {  // sqrt(1+t) coefficients against the closed formula, k <= 24
    Series<Rational> one_plus_t(std::vector<Rational>{Rational(1), Rational(1)}, 24);
    Series<Rational> r = series_sqrt(one_plus_t, 24);
    bool ok = true;
    for (int k = 0; k <= 24; ++k) ok = ok && r.coeff(k) == sqrt_taylor_coeff(static_cast<unsigned>(k));
    cell.require(ok, "sqrt(1+t) coefficients");
    cell.require(r.coeff(0) == 1 && r.coeff(1) == Rational(1, 2) && r.coeff(2) == Rational(-1, 8) &&
                     r.coeff(3) == Rational(1, 16),
                 "sqrt(1+t) leading terms");
  }
  {  // sqrt of 1 is 1
    Series<Rational> one(std::vector<Rational>{Rational(1)}, 6);
    Series<Rational> r = series_sqrt(one, 6);
    bool ok = r.coeff(0) == 1;
    for (int k = 1; k <= 6; ++k) ok = ok && r.coeff(k) == 0;
    cell.require(ok, "sqrt(1)");
  }
  {  // (1+t)(1+2t)(1+3t): square of the root reproduces the cubic to order 6
    Series<Rational> s(std::vector<Rational>{Rational(1), Rational(6), Rational(11), Rational(6)}, 6);
    Series<Rational> r = series_sqrt(s, 6);
    cell.require(r * r == s, "sqrt of (1+t)(1+2t)(1+3t)");
  }
  {  // random unit-constant series, order 12: square of sqrt is the identity
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Rational> coeffs{Rational(1)};
      for (int k = 1; k <= 12; ++k) coeffs.push_back(random_rational(rng, -9, 9, 5));
      Series<Rational> s(std::move(coeffs), 12);
      Series<Rational> r = series_sqrt(s, 12);
      cell.require(r * r == s, "random series sqrt, trial " + std::to_string(trial));
    }
  }
  {  // rational field axioms on random operands
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      Rational x = random_rational(rng, -500, 500, 60);
      Rational y = random_rational(rng, -500, 500, 60);
      ok = ok && (x + y) - y == x;
      if (y != 0) ok = ok && (x * y) / y == x;
    }
    cell.require(ok, "rational exactness");
  }
  cell.require(catalan(0) == 1 && catalan(3) == 5 && catalan(5) == 42, "catalan values");
  cell.require(sqrt_taylor_coeff(0) == 1 && sqrt_taylor_coeff(1) == Rational(1, 2) &&
                   sqrt_taylor_coeff(4) == Rational(-5, 128),
               "sqrt series coefficient values");
  return cell.done();
}

CheckResult check_catalan_hankel(int mmax) {
  Cell cell("catalan_hankel");
  std::vector<Rational> cats;
  for (unsigned k = 0; k <= 2 * static_cast<unsigned>(mmax); ++k) cats.push_back(catalan(k));
  for (int m = 1; m <= mmax; ++m) {
    Rational det = hankel_det(cats, m, -1);  // entries Cat_{i+j-1}
    cell.require(det == 1, "det H_" + std::to_string(m) + " = " + fraction_string(det));
  }
  cell.detail << "det(Cat_{i+j-1}) = 1 for m = 1.." << mmax;
  return cell.done();
}

CheckResult check_root_finder(std::uint64_t seed) {
  Cell cell("root_finder");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> root_dist(-9, 9);
  std::uniform_int_distribution<int> deg_dist(1, 8);

  for (int trial = 0; trial < 20; ++trial) {
    int deg = deg_dist(rng);
    std::vector<double> wanted;
    Poly p(Rational(1));
    for (int i = 0; i < deg; ++i) {
      int r = root_dist(rng);
      wanted.push_back(r);
      p = p * Poly(std::vector<Rational>{Rational(-r), Rational(1)});
    }
    RootResult res = find_roots(complex_coeffs(p), 1e-9);
    double worst = 0.0;
    std::vector<bool> used(wanted.size(), false);
    for (const auto& z : res.roots) {
      double best = 1e99;
      size_t arg = 0;
      for (size_t i = 0; i < wanted.size(); ++i) {
        if (used[i]) continue;
        double d = std::abs(z - Cx(wanted[i]));
        if (d < best) { best = d; arg = i; }
      }
      used[arg] = true;
      worst = std::max(worst, best);
    }
    cell.require(worst <= 1e-9, "integer-root recovery, trial " + std::to_string(trial));
  }

  {  // 9L^2 - 40L - 48
    Poly p(std::vector<Rational>{Rational(-48), Rational(-40), Rational(9)});
    RootResult res = find_roots(complex_coeffs(p), 1e-12);
    double lo = (20.0 - 8.0 * std::sqrt(13.0)) / 9.0;
    double hi = (20.0 + 8.0 * std::sqrt(13.0)) / 9.0;
    cell.require(std::abs(res.roots[0] - Cx(lo)) <= 1e-12 && std::abs(res.roots[1] - Cx(hi)) <= 1e-12,
                 "reference quadratic");
  }
  {  // monomial
    RootResult res = find_roots({Cx(0), Cx(1)}, 1e-12);
    cell.require(res.roots.size() == 1 && std::abs(res.roots[0]) <= 1e-14, "monomial root");
  }
  {  // 45L^3 + 36L^2 - 80L - 64
    Poly p(std::vector<Rational>{Rational(-64), Rational(-80), Rational(36), Rational(45)});
    RootResult res = find_roots(complex_coeffs(p), 1e-12);
    cell.require(std::abs(res.roots[0] - Cx(-4.0 / 3.0)) <= 1e-10 &&
                     std::abs(res.roots[1] - Cx(-0.8)) <= 1e-10 &&
                     std::abs(res.roots[2] - Cx(4.0 / 3.0)) <= 1e-10,
                 "reference cubic");
  }
  return cell.done();
}

namespace {

CheckResult closed_form_identity(const std::string& name, int n, int samples, std::uint64_t seed,
                                 Poly (*closed)(const Rational&, const Rational&)) {
  Cell cell(name);
  std::mt19937_64 rng(seed);
  int exact_matches = 0;
  for (int trial = 0; trial < samples; ++trial) {
    Rational A = random_rational(rng, 1, 24, 6);
    Rational B = random_rational(rng, 1, 24, 6);
    ConfocalFamily fam(A, B);
    Poly bn = cayley_polynomial(fam, n).bn;
    Poly reference = closed(A, B);
    cell.require(bn.monic() == reference.monic(),
                 "monic identity at a2=" + fraction_string(A) + " b2=" + fraction_string(B));
    if (bn == reference) ++exact_matches;
  }
  cell.detail << samples << " random rational families; " << exact_matches
              << " also equal without normalization";
  return cell.done();
}

}  // namespace

CheckResult check_cayley3_identity(int samples, std::uint64_t seed) {
  return closed_form_identity("closure_polynomial_n3_identity", 3, samples, seed, &closed_form_n3);
}

CheckResult check_cayley4_identity(int samples, std::uint64_t seed) {
  return closed_form_identity("closure_polynomial_n4_identity", 4, samples, seed, &closed_form_n4);
}

CheckResult check_reference_roots_n3() {
  Cell cell("reference_roots_n3");
  ConfocalFamily fam(Rational(4), Rational(1));
  CausticSet cs = caustic_roots(fam, 3, 1e-12);
  cell.require(cs.roots.size() == 2, "two roots");
  if (cs.roots.size() == 2) {
    double lo = (20.0 - 8.0 * std::sqrt(13.0)) / 9.0;
    double hi = (20.0 + 8.0 * std::sqrt(13.0)) / 9.0;
    cell.require(std::abs(cs.roots[0].lambda - Cx(lo)) <= 1e-10, "lambda_- to 1e-10");
    cell.require(std::abs(cs.roots[1].lambda - Cx(hi)) <= 1e-10, "lambda_+ to 1e-10");
    cell.require(std::abs(cs.roots[0].lambda.real() - (-0.9827)) <= 5e-5, "lambda_- prints -0.9827");
    cell.require(std::abs(cs.roots[1].lambda.real() - 5.4272) <= 5e-5, "lambda_+ prints 5.4272");
    cell.require(cs.roots[0].admissible && cs.roots[1].admissible, "both admissible");
    cell.detail << "roots " << cs.roots[0].lambda.real() << ", " << cs.roots[1].lambda.real();
  }
  return cell.done();
}

CheckResult check_rational_roots_n4() {
  Cell cell("rational_roots_n4");
  ConfocalFamily fam(Rational(4), Rational(1));
  CayleyTable table = cayley_polynomial(fam, 4);
  auto roots = rational_roots(table.bn);
  cell.require(roots.size() == 3, "three rational roots");
  if (roots.size() == 3) {
    cell.require(roots[0].first == Rational(-4, 3) && roots[0].second == 1, "root -4/3");
    cell.require(roots[1].first == Rational(-4, 5) && roots[1].second == 1, "root -4/5");
    cell.require(roots[2].first == Rational(4, 3) && roots[2].second == 1, "root 4/3");
    // printed reference magnitudes: 4/3 = 1.333..., |middle| = 4/5 = 0.8
    cell.require(-roots[1].first == Rational(4, 5) && roots[2].first == Rational(4, 3),
                 "magnitudes 0.8 and 1.333");
  }
  CausticSet cs = caustic_roots(table, 1e-9);
  cell.require(cs.admissible_count == 3, "N = 3");
  cell.detail << "exact roots -4/3, -4/5, 4/3";
  return cell.done();
}

CheckResult check_degree_table(int nmax, bool literal_even_generic) {
  Cell cell(literal_even_generic ? "degree_table_literal" : "degree_table");
  ConfocalFamily generic(Rational(4), Rational(1));
  ConfocalFamily circle(Rational(1), Rational(1));
  for (int n = 3; n <= nmax; ++n) {
    CayleyTable table = cayley_polynomial(generic, n);
    DegreeReport rep = degree_report(table);
    const bool odd = (n % 2) != 0;
    int expect_even = literal_even_generic ? (n * n) / 4 : (n * n) / 4 - 1;
    int expect = odd ? (n * n - 1) / 4 : expect_even;
    cell.require(rep.degree == expect, "n=" + std::to_string(n) + " expected degree " +
                                           std::to_string(expect) + ", exact degree " +
                                           std::to_string(rep.degree));
    cell.require(rep.degree <= rep.expected_generic,
                 "n=" + std::to_string(n) + " degree exceeds the parity bound");
    CausticSet cs = caustic_roots(table, 1e-9);
    cell.require(cs.admissible_count <= rep.degree && rep.degree <= rep.expected_generic,
                 "n=" + std::to_string(n) + " N <= deg <= bound chain");

    DegreeReport repc = degree_report(circle, n);
    int expect_circle = odd ? (n - 1) / 2 : n / 2 - 1;
    cell.require(repc.degree == expect_circle,
                 "circle n=" + std::to_string(n) + " expected " + std::to_string(expect_circle) +
                     ", exact " + std::to_string(repc.degree));
    cell.detail << "n=" << n << ":" << rep.degree << "/circle:" << repc.degree << " ";
  }
  return cell.done();
}

CheckResult check_closure_grid(const ConfocalFamily& fam, const std::vector<int>& ns,
                               int starts_per_root, std::uint64_t seed,
                               const ClosureThresholds& thresholds) {
  Cell cell("closure_grid");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> imag(-1.0, 1.0);

  double worst_closure = 0, worst_tangency = 0, worst_spread = 0, worst_lambda = 0;
  int traced = 0;
  for (int n : ns) {
    CausticSet cs = caustic_roots(fam, n, 1e-9);
    for (const auto& root : cs.roots) {
      if (!root.admissible) continue;
      for (int s = 0; s < starts_per_root; ++s) {
        Cx theta(angle(rng), 2 * s < starts_per_root ? 0.0 : imag(rng));
        OrbitTrace tr = trace_orbit(fam, root.lambda, ellipse_point(fam, theta), s % 2, n);
        ++traced;
        worst_closure = std::max(worst_closure, tr.closure_residual);
        worst_tangency = std::max(worst_tangency, tr.max_tangency_residual());
        worst_spread = std::max(worst_spread, tr.invariant_spread());
        worst_lambda = std::max(worst_lambda, tr.lambda_consistency(fam));
        std::string where = "n=" + std::to_string(n) + " lambda=(" +
                            std::to_string(root.lambda.real()) + "," +
                            std::to_string(root.lambda.imag()) + ") start " + std::to_string(s);
        cell.require(tr.closure_residual <= thresholds.closure, "closure at " + where);
        cell.require(tr.max_tangency_residual() <= thresholds.tangency, "tangency at " + where);
        cell.require(tr.invariant_spread() <= thresholds.invariant_spread, "P spread at " + where);
        cell.require(tr.lambda_consistency(fam) <= thresholds.lambda_consistency,
                     "lambda consistency at " + where);
      }
    }
  }
  cell.detail << traced << " traces; worst closure " << worst_closure << ", tangency "
              << worst_tangency << ", P spread " << worst_spread << ", |lambda + a2 b2 P| "
              << worst_lambda;
  return cell.done();
}

CheckResult check_negative_control(const ConfocalFamily& fam, int count, std::uint64_t seed,
                                   double min_closure, double min_distance) {
  Cell cell("negative_control");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pick(-3.0, 7.0);
  CausticSet cs = caustic_roots(fam, 3, 1e-9);
  ProjPoint start = ProjPoint::affine(Cx(-std::sqrt(fam.a2d)), Cx(0));

  double least = 1e300;
  int produced = 0;
  int guard = 0;
  while (produced < count && guard++ < 10000) {
    double lambda = pick(rng);
    bool usable = std::abs(lambda + fam.a2d) > 0.15 && std::abs(lambda + fam.b2d) > 0.15;
    for (const auto& r : cs.roots) usable = usable && std::abs(Cx(lambda) - r.lambda) >= min_distance;
    if (!usable) continue;
    OrbitTrace tr = trace_orbit(fam, Cx(lambda), start, 0, 3);
    least = std::min(least, tr.closure_residual);
    cell.require(tr.closure_residual >= min_closure,
                 "closure " + std::to_string(tr.closure_residual) + " at non-root lambda " +
                     std::to_string(lambda));
    ++produced;
  }
  cell.require(produced == count, "sample count");
  cell.detail << produced << " non-root lambdas; smallest closure residual " << least;
  return cell.done();
}

CheckResult check_degenerate_triangles(const ConfocalFamily& fam) {
  Cell cell("degenerate_triangles");
  auto configs = degenerate_triangles(fam);
  cell.require(configs.size() == 8, "count " + std::to_string(configs.size()));
  const Conic ellipse = fam.ellipse();
  double worst = 0;
  for (size_t i = 0; i < configs.size(); ++i) {
    const auto& t = configs[i];
    std::string tag = "config " + std::to_string(i);
    cell.require(is_isotropic(t.side_isotropic), tag + ": side A isotropic");
    bool on_i = incidence(t.side_isotropic, cyclic_point_I()) <= 1e-9;
    bool on_j = incidence(t.side_isotropic, cyclic_point_J()) <= 1e-9;
    cell.require(on_i != on_j, tag + ": side A contains exactly one cyclic point");
    cell.require(tangency_residual(t.side_isotropic, ellipse) <= 1e-9, tag + ": side A tangent to E");
    cell.require(incidence(t.side_isotropic, t.alpha) <= 1e-9, tag + ": side A through alpha");
    cell.require(!is_isotropic(t.side_doubled), tag + ": side B non-isotropic");
    double tb = tangency_residual(t.side_doubled, conic_of(fam, t.caustic_lambda));
    worst = std::max(worst, tb);
    cell.require(tb <= 1e-9, tag + ": side B tangent to its caustic");
    cell.require(incidence(t.side_doubled, t.alpha) <= 1e-9 && incidence(t.side_doubled, t.beta) <= 1e-9,
                 tag + ": side B through alpha and beta");
    cell.require(ellipse.point_residual(t.beta) <= 1e-9, tag + ": beta on E");
    cell.require(chordal(t.alpha, t.beta) > 1e-6, tag + ": beta distinct from alpha");
    for (size_t j = 0; j < i; ++j)
      cell.require(chordal(configs[j].side_doubled, t.side_doubled) > 1e-6 ||
                       configs[j].caustic_index != t.caustic_index,
                   tag + ": distinct from config " + std::to_string(j));
  }
  cell.detail << configs.size() << " configurations; worst side-B tangency residual " << worst;
  return cell.done();
}

CheckResult check_special_quads() {
  Cell cell("special_quad_orbits");
  ConfocalFamily fam(Rational(4), Rational(1));
  SpecialQuads sq = special_quad_orbits(fam);
  cell.require(sq.first_defined && sq.orbits.size() == 3, "three orbits");
  CausticSet cs = caustic_roots(fam, 4, 1e-9);
  cell.require(cs.roots.size() == 3, "three caustic roots");
  if (sq.orbits.size() == 3 && cs.roots.size() == 3) {
    // lambda_exact is {-4/3, -4/5, 4/3}, already in root order
    for (int i = 0; i < 3; ++i) {
      double gap = std::abs(Cx(to_double(sq.lambda_exact[static_cast<size_t>(i)])) -
                            cs.roots[static_cast<size_t>(i)].lambda);
      cell.require(gap <= 1e-10, "orbit lambda matches root " + std::to_string(i));
      double lam_from_p = sq.orbits[static_cast<size_t>(i)].lambda_consistency(fam);
      cell.require(lam_from_p <= 1e-10, "-(ab)^2 P matches lambda, orbit " + std::to_string(i));
    }
    cell.require(sq.lambda_exact[0] == Rational(-4, 3) && sq.lambda_exact[1] == Rational(-4, 5) &&
                     sq.lambda_exact[2] == Rational(4, 3),
                 "exact caustic parameters");

    const OrbitTrace& infinite = sq.orbits[0];
    cell.require(infinite.infinite_vertices.size() == 2, "two infinite vertices");
    for (int idx : infinite.infinite_vertices)
      cell.require(fam.ellipse().point_residual(infinite.vertices[static_cast<size_t>(idx)]) <= 1e-12,
                   "infinite vertex on E homogeneously");

    const OrbitTrace& self_reflecting = sq.orbits[2];
    double s7 = std::sqrt(7.0) / 3.0;
    ProjPoint n_plus = ProjPoint::affine(Cx(-8.0 / 3.0), Cx(0.0, s7));
    ProjPoint n_minus = ProjPoint::affine(Cx(-8.0 / 3.0), Cx(0.0, -s7));
    cell.require(chordal(self_reflecting.vertices[1], n_plus) <= 1e-10, "N+ vertex");
    cell.require(chordal(self_reflecting.vertices[3], n_minus) <= 1e-10, "N- vertex");
    cell.require(self_reflecting.max_reflection_residual() <= 1e-9, "self-reflection residuals");

    for (const auto& orbit : sq.orbits) {
      cell.require(orbit.closure_residual <= 1e-10, "closure");
      cell.require(orbit.max_tangency_residual() <= 1e-9, "tangency");
      cell.require(orbit.max_reflection_residual() <= 1e-9, "reflection");
    }
  }

  // Pell approximant of sqrt(2): lambda_1 sits ~9e-12 from -a^2 and the
  // near-degeneration must be reported while the orbit list stays complete.
  ConfocalFamily near(Rational(BigInt(665857), BigInt(470832)) * Rational(BigInt(665857), BigInt(470832)),
                      Rational(1));
  SpecialQuads sq2 = special_quad_orbits(near);
  cell.require(sq2.first_defined, "approximant family keeps three orbits");
  cell.require(sq2.degeneration_note.has_value(), "approximant family reports near-degeneration");
  if (sq2.degeneration_note) cell.detail << "note: " << *sq2.degeneration_note;
  return cell.done();
}

CheckResult check_focal_properties(const ConfocalFamily& fam, int points, std::uint64_t seed) {
  Cell cell("focal_properties");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.05, 2.0 * M_PI - 0.05);
  auto f = foci(fam);
  double inv_a2 = 1.0 / fam.a2d, inv_b2 = 1.0 / fam.b2d;

  double worst_p = 0, worst_refl = 0;
  for (int i = 0; i < points; ++i) {
    ProjPoint m = ellipse_point(fam, Cx(angle(rng), 0.0));
    Direction to_f1(f[0].x() - m.x(), f[0].y() - m.y());
    Direction to_g1(f[2].x() - m.x(), f[2].y() - m.y());
    double da = std::abs(joachimsthal(fam, m, to_f1) - Cx(inv_a2));
    double db = std::abs(joachimsthal(fam, m, to_g1) - Cx(inv_b2));
    FocalReflection fr = focal_reflection_check(fam, m);
    worst_p = std::max({worst_p, da, db});
    worst_refl = std::max({worst_refl, fr.real_pair, fr.complex_pair});
    cell.require(da <= 1e-10, "P(M, M->F1) = 1/a^2 at sample " + std::to_string(i));
    cell.require(db <= 1e-10, "P(M, M->G1) = 1/b^2 at sample " + std::to_string(i));
    cell.require(fr.real_pair <= 1e-10 && fr.complex_pair <= 1e-10,
                 "focal reflection at sample " + std::to_string(i));
  }
  {  // vertex: the focal line reflects onto itself
    ProjPoint vertex = ProjPoint::affine(Cx(std::sqrt(fam.a2d)), Cx(0));
    FocalReflection fr = focal_reflection_check(fam, vertex);
    cell.require(fr.real_pair <= 1e-12, "vertex reflection");
  }
  cell.detail << points << " samples; worst P deviation " << worst_p << ", worst incidence "
              << worst_refl;
  return cell.done();
}

CheckResult check_root_location(int samples, std::uint64_t seed) {
  Cell cell("root_location");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(2, 40);
  std::uniform_int_distribution<int> den(1, 6);

  int done = 0;
  int guard = 0;
  while (done < samples && guard++ < 10000) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    if (a <= b) continue;
    Rational A = a * a, B = b * b;
    ConfocalFamily fam(A, B);
    std::string tag = " at a=" + fraction_string(a) + " b=" + fraction_string(b);

    // n = 3: sign checks on the exact quadratic. With positive leading
    // coefficient, p(0) < 0 puts the roots on both sides of zero and
    // p(-b^2) > 0 puts -b^2 outside the root interval, hence below lambda_-.
    Poly p3 = cayley_polynomial(fam, 3).bn;
    if (p3.leading() < 0) p3 = -p3;
    cell.require(p3.degree() == 2, "n=3 quadratic" + tag);
    cell.require(p3.eval(Rational(0)) < 0, "n=3 lambda_- < 0 < lambda_+" + tag);
    cell.require(p3.eval(-B) > 0, "n=3 lambda_- > -b^2" + tag);

    // n = 4: the three rational roots are exact, so the chain is exact.
    Poly p4 = cayley_polynomial(fam, 4).bn;
    Rational l1 = -A * B / (A - B);
    Rational l2 = -A * B / (A + B);
    Rational l3 = A * B / (A - B);
    cell.require(p4.eval(l1) == 0 && p4.eval(l2) == 0 && p4.eval(l3) == 0, "n=4 exact roots" + tag);
    cell.require(l1 < -B && -B < l2 && l2 < 0 && 0 < l3, "n=4 chain" + tag);
    Rational gap = l1 + A;  // sign(lambda_1 + a^2) = sign(a^2 - 2 b^2)
    Rational marker = A - 2 * B;
    bool trichotomy = (gap > 0 && marker > 0) || (gap < 0 && marker < 0) || (gap == 0 && marker == 0);
    cell.require(trichotomy, "n=4 trichotomy" + tag);
    ++done;
  }
  {  // the equality branch of the trichotomy: a^2 = 2 b^2 exactly
    Rational B(9, 4), A = 2 * B;
    ConfocalFamily fam(A, B);
    Poly p4 = cayley_polynomial(fam, 4).bn;
    Rational l1 = -A * B / (A - B);
    cell.require(l1 == -A && p4.eval(l1) == 0, "a^2 = 2 b^2 gives lambda_1 = -a^2");
  }
  cell.require(done == samples, "sample count");
  cell.detail << done << " random rational families, all checks exact";
  return cell.done();
}

CheckResult caustic_summary(const ConfocalFamily& fam, int n) {
  Cell cell("caustic_summary");
  CayleyTable table = cayley_polynomial(fam, n);
  CausticSet cs = caustic_roots(table, 1e-9);
  DegreeReport rep = degree_report(table);
  cell.detail << "n=" << n << " degree " << rep.degree << " N=" << cs.admissible_count << ";";
  for (const auto& r : cs.roots) {
    cell.detail << " lambda=(" << r.lambda.real() << "," << r.lambda.imag() << ")"
                << (r.admissible ? "" : " [inadmissible]")
                << (r.multiplicity > 1 ? " [mult " + std::to_string(r.multiplicity) + "]" : "");
  }
  return cell.done();
}

}  // namespace billiards
