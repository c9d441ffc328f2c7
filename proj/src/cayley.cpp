#include "billiards/cayley.hpp"

#include <stdexcept>

#include "billiards/hankel.hpp"

namespace billiards {

Poly cayley_coefficient(const ConfocalFamily& fam, int k) {
  if (k < 0) throw std::invalid_argument("cayley_coefficient: k must be >= 0");
  std::vector<Rational> c(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) c[static_cast<size_t>(i)] = sqrt_taylor_coeff(static_cast<unsigned>(i));

  // powers of (a^2 + lambda) and (b^2 + lambda)
  std::vector<Poly> pa(static_cast<size_t>(k) + 1), pb(static_cast<size_t>(k) + 1);
  pa[0] = Poly(Rational(1));
  pb[0] = Poly(Rational(1));
  Poly la(std::vector<Rational>{fam.a2, Rational(1)});
  Poly lb(std::vector<Rational>{fam.b2, Rational(1)});
  for (int i = 1; i <= k; ++i) {
    pa[static_cast<size_t>(i)] = pa[static_cast<size_t>(i - 1)] * la;
    pb[static_cast<size_t>(i)] = pb[static_cast<size_t>(i - 1)] * lb;
  }

  Poly sum;
  for (int u = 0; u <= k; ++u) {
    Rational au = c[static_cast<size_t>(u)] / rational_pow(fam.a2, u);
    for (int v = 0; v + u <= k; ++v) {
      int w = k - u - v;
      Rational coeff = au * (c[static_cast<size_t>(v)] / rational_pow(fam.b2, v)) * c[static_cast<size_t>(w)];
      sum += pa[static_cast<size_t>(u)] * pb[static_cast<size_t>(v)] * coeff;
    }
  }
  return sum;
}

std::vector<Poly> cayley_coefficients_by_series(const ConfocalFamily& fam, int kmax) {
  if (kmax < 0) throw std::invalid_argument("cayley_coefficients_by_series: kmax must be >= 0");
  // ((a^2+lambda)/a^2 t + 1)((b^2+lambda)/b^2 t + 1)(t + 1) as a cubic in t
  Poly alpha(std::vector<Rational>{Rational(1), 1 / fam.a2});
  Poly beta(std::vector<Rational>{Rational(1), 1 / fam.b2});
  Poly one(Rational(1));
  std::vector<Poly> cubic(4);
  cubic[0] = one;
  cubic[1] = alpha + beta + one;
  cubic[2] = alpha * beta + alpha + beta;
  cubic[3] = alpha * beta;
  Series<Poly> s(std::move(cubic), std::max(kmax, 3));
  Series<Poly> r = series_sqrt(s, kmax);
  return r.coeffs();
}

CayleyTable cayley_polynomial(const ConfocalFamily& fam, int n) {
  if (n < 3) throw std::invalid_argument("cayley_polynomial: n must be >= 3");
  const bool odd = (n % 2) != 0;
  const int m = odd ? (n - 1) / 2 : n / 2;
  const int kmax = odd ? 2 * m : 2 * m - 1;

  std::vector<Poly> b(static_cast<size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) b[static_cast<size_t>(k)] = cayley_coefficient(fam, k);

  Poly bn = odd ? hankel_det(b, m, 0) : hankel_det(b, m - 1, 1);
  return CayleyTable{fam, n, m, std::move(b), std::move(bn)};
}

DegreeReport degree_report(const CayleyTable& table) {
  const int n = table.n;
  const bool odd = (n % 2) != 0;
  const int m = table.m;
  DegreeReport report{};
  report.circle = table.fam.is_circle();
  report.degree = table.bn.degree();
  report.structural_bound = odd ? m * (m + 1) : m * m - 1;
  if (report.circle)
    report.expected_generic = odd ? (n - 1) / 2 : n / 2 - 1;
  else
    report.expected_generic = odd ? (n * n - 1) / 4 : n * n / 4;
  report.leading = table.bn.is_zero() ? Rational(0) : table.bn.leading();
  return report;
}

DegreeReport degree_report(const ConfocalFamily& fam, int n) {
  return degree_report(cayley_polynomial(fam, n));
}

ForbiddenValues forbidden_values(const CayleyTable& table) {
  return ForbiddenValues{table.bn.eval(-table.fam.a2), table.bn.eval(-table.fam.b2)};
}

ForbiddenValues forbidden_values(const ConfocalFamily& fam, int n) {
  return forbidden_values(cayley_polynomial(fam, n));
}

CausticSet caustic_roots(const CayleyTable& table, double tol) {
  CausticSet out;
  out.polynomial = table.bn;
  if (table.bn.degree() < 1) {
    out.squarefree = true;
    return out;
  }
  Poly g = poly_gcd(table.bn, table.bn.derivative());
  out.squarefree = g.degree() == 0;

  RootResult found = find_roots(complex_coeffs(table.bn), tol);

  double scale = std::max({1.0, table.fam.a2d, table.fam.b2d});
  auto admissible = [&](const Cx& lambda) {
    return std::abs(lambda + Cx(table.fam.a2d)) > tol * scale &&
           std::abs(lambda + Cx(table.fam.b2d)) > tol * scale;
  };

  if (out.squarefree) {
    for (const auto& r : found.roots) out.roots.push_back({r, 1, admissible(r)});
  } else {
    for (const auto& cluster : found.clustered)
      out.roots.push_back({cluster.value, cluster.multiplicity,
                           cluster.multiplicity == 1 && admissible(cluster.value)});
  }
  for (auto& r : out.roots) {
    r.admissible = r.admissible && r.multiplicity == 1;
    if (r.admissible) ++out.admissible_count;
  }
  return out;
}

CausticSet caustic_roots(const ConfocalFamily& fam, int n, double tol) {
  return caustic_roots(cayley_polynomial(fam, n), tol);
}

}  // namespace billiards
