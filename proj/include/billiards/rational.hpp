#ifndef BILLIARDS_RATIONAL_HPP
#define BILLIARDS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace billiards {

// Exact arithmetic layer. Every coefficient that feeds the Cayley pipeline
// lives here; floating point only enters downstream of it.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Parses "p/q", an integer, or a plain decimal literal ("1.5" -> 3/2).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string fraction_string(const Rational& r);

Rational rational_pow(const Rational& base, int exponent);

BigInt binomial(unsigned n, unsigned k);

/// Catalan number Cat_k = binom(2k,k)/(k+1), returned exactly.
Rational catalan(unsigned k);

/// k-th Taylor coefficient of sqrt(1+t):
///   c_k = (-1)^(k+1) / (4^k (2k-1)) * binom(2k,k).
Rational sqrt_taylor_coeff(unsigned k);

}  // namespace billiards

#endif
