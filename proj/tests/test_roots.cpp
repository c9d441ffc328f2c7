#include <doctest.h>

#include "billiards/polynomial.hpp"
#include "billiards/projective.hpp"
#include "billiards/roots.hpp"

#include <cmath>
#include <random>

using namespace billiards;

TEST_CASE("reference quadratic 9L^2 - 40L - 48") {
  Poly p(std::vector<Rational>{Rational(-48), Rational(-40), Rational(9)});
  RootResult res = find_roots(complex_coeffs(p), 1e-12);
  REQUIRE(res.roots.size() == 2);
  double lo = (20.0 - 8.0 * std::sqrt(13.0)) / 9.0;
  double hi = (20.0 + 8.0 * std::sqrt(13.0)) / 9.0;
  CHECK(std::abs(res.roots[0] - Cx(lo)) <= 1e-12);
  CHECK(std::abs(res.roots[1] - Cx(hi)) <= 1e-12);
  CHECK(doctest::Approx(res.roots[0].real()).epsilon(1e-4) == -0.9827);
  CHECK(doctest::Approx(res.roots[1].real()).epsilon(1e-4) == 5.4272);
}

TEST_CASE("monomial") {
  RootResult res = find_roots({Cx(0), Cx(1)}, 1e-12);
  REQUIRE(res.roots.size() == 1);
  CHECK(std::abs(res.roots[0]) <= 1e-14);
}

TEST_CASE("reference cubic 45L^3 + 36L^2 - 80L - 64") {
  Poly p(std::vector<Rational>{Rational(-64), Rational(-80), Rational(36), Rational(45)});
  RootResult res = find_roots(complex_coeffs(p), 1e-12);
  REQUIRE(res.roots.size() == 3);
  CHECK(std::abs(res.roots[0] - Cx(-4.0 / 3.0)) <= 1e-10);
  CHECK(std::abs(res.roots[1] - Cx(-4.0 / 5.0)) <= 1e-10);
  CHECK(std::abs(res.roots[2] - Cx(4.0 / 3.0)) <= 1e-10);
}

TEST_CASE("random integer-root polynomials recovered to 1e-9") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> root_dist(-9, 9);
  std::uniform_int_distribution<int> deg_dist(2, 8);
  for (int trial = 0; trial < 25; ++trial) {
    int deg = deg_dist(rng);
    std::vector<double> wanted;
    Poly p(Rational(1));
    for (int i = 0; i < deg; ++i) {
      int r = root_dist(rng);
      wanted.push_back(r);
      p = p * Poly(std::vector<Rational>{Rational(-r), Rational(1)});
    }
    RootResult res = find_roots(complex_coeffs(p), 1e-9);
    std::vector<bool> used(wanted.size(), false);
    for (const auto& z : res.roots) {
      double best = 1e99;
      size_t arg = 0;
      for (size_t i = 0; i < wanted.size(); ++i) {
        if (used[i]) continue;
        double d = std::abs(z - Cx(wanted[i]));
        if (d < best) {
          best = d;
          arg = i;
        }
      }
      used[arg] = true;
      CHECK(best <= 1e-9);
    }
  }
}

TEST_CASE("deterministic output") {
  Poly p(std::vector<Rational>{Rational(-64), Rational(-80), Rational(36), Rational(45)});
  RootResult a = find_roots(complex_coeffs(p), 1e-12);
  RootResult b = find_roots(complex_coeffs(p), 1e-12);
  REQUIRE(a.roots.size() == b.roots.size());
  for (size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i] == b.roots[i]);
}

TEST_CASE("clustered multiplicities") {
  // (x - 1)^2 (x + 2)
  Poly p = Poly(std::vector<Rational>{Rational(-1), Rational(1)}) *
           Poly(std::vector<Rational>{Rational(-1), Rational(1)}) *
           Poly(std::vector<Rational>{Rational(2), Rational(1)});
  RootResult res = find_roots(complex_coeffs(p), 1e-6);
  REQUIRE(res.clustered.size() == 2);
  CHECK(res.clustered[0].multiplicity == 1);
  CHECK(std::abs(res.clustered[0].value - Cx(-2.0)) <= 1e-8);
  CHECK(res.clustered[1].multiplicity == 2);
  CHECK(std::abs(res.clustered[1].value - Cx(1.0)) <= 1e-6);
}

TEST_CASE("non-convergence carries the best iterate") {
  Poly p(Rational(1));
  for (int r = 1; r <= 8; ++r) p = p * Poly(std::vector<Rational>{Rational(-r), Rational(1)});
  try {
    find_roots(complex_coeffs(p), 1e-12, 0);
    FAIL("expected root_convergence_error");
  } catch (const root_convergence_error& e) {
    CHECK(e.best_roots.size() == 8);
    CHECK(e.best_residuals.size() == 8);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(find_roots({Cx(1)}, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(find_roots({Cx(0), Cx(1)}, -1.0), std::invalid_argument);
}
