#include <doctest.h>

#include "billiards/hankel.hpp"
#include "billiards/polynomial.hpp"
#include "billiards/rational.hpp"
#include "billiards/series.hpp"

#include <random>

using namespace billiards;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("1.5") == Rational(3, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("665857/470832") == Rational(665857, 470832));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(fraction_string(Rational(-4, 6)) == "-2/3");
  CHECK(fraction_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("sqrt series coefficients") {
  CHECK(sqrt_taylor_coeff(0) == 1);
  CHECK(sqrt_taylor_coeff(1) == Rational(1, 2));
  CHECK(sqrt_taylor_coeff(2) == Rational(-1, 8));
  CHECK(sqrt_taylor_coeff(3) == Rational(1, 16));
  CHECK(sqrt_taylor_coeff(4) == Rational(-5, 128));

  // must agree with the recurrence route for every k <= 24
  Series<Rational> s(std::vector<Rational>{Rational(1), Rational(1)}, 24);
  Series<Rational> r = series_sqrt(s, 24);
  for (int k = 0; k <= 24; ++k) CHECK(r.coeff(k) == sqrt_taylor_coeff(static_cast<unsigned>(k)));
}

TEST_CASE("series sqrt examples") {
  SUBCASE("1 + t to order 3") {
    Series<Rational> s(std::vector<Rational>{Rational(1), Rational(1)}, 3);
    Series<Rational> r = series_sqrt(s, 3);
    CHECK(r.coeff(0) == 1);
    CHECK(r.coeff(1) == Rational(1, 2));
    CHECK(r.coeff(2) == Rational(-1, 8));
    CHECK(r.coeff(3) == Rational(1, 16));
  }
  SUBCASE("constant 1") {
    Series<Rational> s(std::vector<Rational>{Rational(1)}, 5);
    Series<Rational> r = series_sqrt(s, 5);
    for (int k = 1; k <= 5; ++k) CHECK(r.coeff(k) == 0);
  }
  SUBCASE("(1+t)(1+2t)(1+3t) to order 6") {
    Series<Rational> s(std::vector<Rational>{Rational(1), Rational(6), Rational(11), Rational(6)}, 6);
    Series<Rational> r = series_sqrt(s, 6);
    CHECK(r * r == s);
  }
  SUBCASE("rejects constant term != 1") {
    Series<Rational> s(std::vector<Rational>{Rational(2), Rational(1)}, 3);
    CHECK_THROWS_AS(series_sqrt(s, 3), std::invalid_argument);
  }
}

TEST_CASE("series sqrt squares back, random series up to order 12") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> c{Rational(1)};
    for (int k = 1; k <= 12; ++k) c.push_back(Rational(num(rng), den(rng)));
    Series<Rational> s(std::move(c), 12);
    Series<Rational> r = series_sqrt(s, 12);
    CHECK(r * r == s);
  }
}

TEST_CASE("series multiplication respects truncation") {
  Series<Rational> a(std::vector<Rational>{Rational(1), Rational(2)}, 2);
  Series<Rational> b(std::vector<Rational>{Rational(1), Rational(3)}, 5);
  CHECK((a * b).order() == 2);
}

TEST_CASE("hankel determinants over the catalan sequence") {
  std::vector<Rational> cats;
  for (unsigned k = 0; k <= 16; ++k) cats.push_back(catalan(k));
  // entries Cat_{i+j-1}: determinant 1 for every size
  for (int m = 1; m <= 8; ++m) CHECK(hankel_det(cats, m, -1) == 1);
  // 1x1 determinant is the entry itself
  CHECK(hankel_det(cats, 1, 0) == catalan(2));
  // Cat_1 Cat_3 - Cat_2^2 = 5 - 4
  CHECK(hankel_det(cats, 2, -1) == 1);
  CHECK_THROWS_AS(hankel_det(cats, 9, 0), std::invalid_argument);
}

TEST_CASE("hankel determinant over polynomial entries") {
  // seq_k = (x + k): det [[x+2, x+3], [x+3, x+4]] = (x+2)(x+4) - (x+3)^2 = -1
  std::vector<Poly> seq;
  for (int k = 0; k <= 4; ++k) seq.push_back(Poly(std::vector<Rational>{Rational(k), Rational(1)}));
  Poly det = hankel_det(seq, 2, 0);
  CHECK(det == Poly(Rational(-1)));
}

TEST_CASE("rational arithmetic exactness") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 100);
  for (int trial = 0; trial < 100; ++trial) {
    Rational x(num(rng), den(rng));
    Rational y(num(rng), den(rng));
    CHECK((x + y) - y == x);
    if (y != 0) CHECK((x * y) / y == x);
  }
}

TEST_CASE("polynomial arithmetic and division") {
  Poly p(std::vector<Rational>{Rational(-48), Rational(-40), Rational(9)});
  Poly q(std::vector<Rational>{Rational(4), Rational(3)});  // 3x + 4
  auto [quo, rem] = divmod(p, q);
  CHECK(quo * q + rem == p);
  CHECK(rem.degree() < q.degree());
  CHECK_THROWS_AS(exact_div(p, q), std::logic_error);
  CHECK(exact_div(p * q, q) == p);

  Poly d = p.derivative();
  CHECK(d == Poly(std::vector<Rational>{Rational(-40), Rational(18)}));

  CHECK(poly_gcd(p * q, q) == q.monic());
  CHECK(poly_gcd(p, Poly()) == p);
}

TEST_CASE("rational root extraction") {
  // 45x^3 + 36x^2 - 80x - 64 = (5x+4)(3x-4)(3x+4)
  Poly p(std::vector<Rational>{Rational(-64), Rational(-80), Rational(36), Rational(45)});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].first == Rational(-4, 3));
  CHECK(roots[1].first == Rational(-4, 5));
  CHECK(roots[2].first == Rational(4, 3));

  // multiplicity: x^2 (x - 1/2)^3
  Poly m = Poly::monomial(2) * Poly(std::vector<Rational>{Rational(-1, 2), Rational(1)}) *
           Poly(std::vector<Rational>{Rational(-1, 2), Rational(1)}) *
           Poly(std::vector<Rational>{Rational(-1, 2), Rational(1)});
  auto mr = rational_roots(m);
  REQUIRE(mr.size() == 2);
  CHECK(mr[0] == std::pair<Rational, int>(Rational(0), 2));
  CHECK(mr[1] == std::pair<Rational, int>(Rational(1, 2), 3));
}
