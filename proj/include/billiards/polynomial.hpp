#ifndef BILLIARDS_POLYNOMIAL_HPP
#define BILLIARDS_POLYNOMIAL_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "billiards/rational.hpp"

namespace billiards {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient index = power. The zero polynomial has no coefficients
/// and degree -1; otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(long long constant) : Poly(Rational(constant)) {}
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(int power, const Rational& coeff = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const;
  Rational coeff(int power) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  Poly derivative() const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& s);
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a by b over the rationals; b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Division known to be exact; throws std::logic_error on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd via the Euclidean algorithm.
Poly poly_gcd(Poly a, Poly b);

/// Coefficients converted to complex doubles, ascending powers.
std::vector<std::complex<double>> complex_coeffs(const Poly& p);

/// All rational roots with multiplicities, sorted ascending. Candidates come
/// from the rational root theorem; divisor enumeration uses trial division,
/// so extremely large prime factors in the end coefficients may hide roots.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

}  // namespace billiards

#endif
