#include "billiards/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace billiards {

Poly::Poly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int power, const Rational& coeff) {
  if (power < 0) throw std::invalid_argument("monomial power must be >= 0");
  if (coeff == 0) return Poly();
  std::vector<Rational> c(static_cast<size_t>(power) + 1, Rational(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Poly::coeff(int power) const {
  if (power < 0 || static_cast<size_t>(power) >= c_.size()) return Rational(0);
  return c_[static_cast<size_t>(power)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return *this * (1 / leading());
}

Poly Poly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly(std::move(c));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Rational& s) {
  if (s == 0) return Poly();
  std::vector<Rational> out(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i] * s;
  return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational ck = coeff(k);
    if (ck == 0) continue;
    if (!first) os << (ck > 0 ? " + " : " - ");
    else if (ck < 0) os << "-";
    Rational mag = ck > 0 ? ck : -ck;
    if (k == 0 || mag != 1) os << fraction_string(mag);
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly(), rem};
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational factor = rem.leading() / b.leading();
    q[static_cast<size_t>(shift)] = factor;
    rem -= Poly::monomial(shift, factor) * b;
  }
  return {Poly(std::move(q)), rem};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

std::vector<std::complex<double>> complex_coeffs(const Poly& p) {
  std::vector<std::complex<double>> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(to_double(c), 0.0);
  return out;
}

namespace {

// Divisors of |n| from trial division; factors above the bound are kept as a
// single pseudo-prime, which can only lose candidates, never invent roots.
std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::map<BigInt, int> factors;
  if (n == 0) return {};
  BigInt d = 2;
  const BigInt bound = 1 << 20;
  while (n > 1 && d <= bound && d * d <= n) {
    while (n % d == 0) {
      ++factors[d];
      n /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) ++factors[n];
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [prime, mult] : factors) {
    size_t base = out.size();
    BigInt pw = 1;
    for (int e = 1; e <= mult; ++e) {
      pw *= prime;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  Poly work = p;

  int zero_mult = 0;
  while (!work.is_zero() && work.coeff(0) == 0) {
    work = exact_div(work, Poly::monomial(1));
    ++zero_mult;
  }
  if (zero_mult > 0) out.push_back({Rational(0), zero_mult});
  if (work.degree() < 1) {
    std::sort(out.begin(), out.end());
    return out;
  }

  BigInt den_lcm = 1;
  for (const auto& c : work.coeffs()) {
    BigInt d = denominator(c);
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  BigInt lead = numerator(work.leading() * Rational(den_lcm));
  BigInt constant = numerator(work.coeff(0) * Rational(den_lcm));

  for (const BigInt& top : divisors(constant)) {
    for (const BigInt& bottom : divisors(lead)) {
      for (int sign = 0; sign < 2; ++sign) {
        Rational candidate(sign ? -top : top, bottom);
        int mult = 0;
        while (!work.is_zero() && work.degree() >= 1 && work.eval(candidate) == 0) {
          work = exact_div(work, Poly(std::vector<Rational>{-candidate, Rational(1)}));
          ++mult;
        }
        if (mult > 0) out.push_back({candidate, mult});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace billiards
