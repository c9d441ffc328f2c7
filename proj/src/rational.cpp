#include "billiards/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace billiards {

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits: " + s);
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("not an integer literal: " + s);
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_integer(text));
  std::string head = text.substr(0, dot);
  std::string tail = text.substr(dot + 1);
  if (tail.empty()) return Rational(parse_integer(head));
  bool negative = !head.empty() && head[0] == '-';
  std::string digits = (head == "-" || head == "+" || head.empty()) ? "0" : head.substr(negative || head[0] == '+' ? 1 : 0);
  for (char ch : tail)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("not a decimal literal: " + text);
  BigInt scaled = parse_integer(digits + tail);
  BigInt den = 1;
  for (size_t i = 0; i < tail.size(); ++i) den *= 10;
  Rational r(scaled, den);
  return negative ? -r : r;
}

std::string fraction_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::invalid_argument("negative power of zero");
    return 1 / rational_pow(base, -exponent);
  }
  Rational acc(1);
  Rational b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (unsigned i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;  // exact at every step
  }
  return acc;
}

Rational catalan(unsigned k) {
  return Rational(binomial(2 * k, k), BigInt(k + 1));
}

Rational sqrt_taylor_coeff(unsigned k) {
  if (k == 0) return Rational(1);
  BigInt four_k = 1;
  for (unsigned i = 0; i < k; ++i) four_k *= 4;
  Rational value(binomial(2 * k, k), four_k * BigInt(2 * k - 1));
  return (k % 2 == 1) ? value : -value;
}

}  // namespace billiards
