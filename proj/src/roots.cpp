#include "billiards/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace billiards {

namespace {

using Cx = std::complex<double>;

Cx horner(const std::vector<Cx>& c, const Cx& x) {
  Cx acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Backward-error scale sum_i |a_i| |x|^i.
double eval_scale(const std::vector<Cx>& c, const Cx& x) {
  double acc = 0.0, pw = 1.0;
  double ax = std::abs(x);
  for (const auto& a : c) {
    acc += std::abs(a) * pw;
    pw *= ax;
  }
  return acc;
}

}  // namespace

RootResult find_roots(const std::vector<Cx>& coeffs_in, double tol, int max_iterations) {
  if (tol <= 0) throw std::invalid_argument("find_roots: tol must be positive");
  std::vector<Cx> c = coeffs_in;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() < 2) throw std::invalid_argument("find_roots: degree must be >= 1");
  const int deg = static_cast<int>(c.size()) - 1;

  std::vector<Cx> dc(static_cast<size_t>(deg));
  for (int i = 1; i <= deg; ++i) dc[static_cast<size_t>(i - 1)] = c[static_cast<size_t>(i)] * double(i);

  double cauchy = 0.0;
  for (int i = 0; i < deg; ++i)
    cauchy = std::max(cauchy, std::abs(c[static_cast<size_t>(i)] / c.back()));
  cauchy += 1.0;

  // Deterministic start: roots of unity on the Cauchy circle, fixed phase.
  std::vector<Cx> z(static_cast<size_t>(deg));
  for (int j = 0; j < deg; ++j) {
    double angle = 2.0 * std::numbers::pi * double(j) / double(deg) + 0.4;
    z[static_cast<size_t>(j)] = cauchy * Cx(std::cos(angle), std::sin(angle));
  }

  int iterations = 0;
  for (; iterations < max_iterations; ++iterations) {
    double max_step = 0.0;
    for (int j = 0; j < deg; ++j) {
      Cx zj = z[static_cast<size_t>(j)];
      Cx pv = horner(c, zj);
      if (std::abs(pv) == 0.0) continue;
      Cx dv = horner(dc, zj);
      Cx newton = (std::abs(dv) == 0.0) ? Cx(0.0, 0.0) : pv / dv;
      Cx repulse(0.0, 0.0);
      for (int k = 0; k < deg; ++k) {
        if (k == j) continue;
        Cx diff = zj - z[static_cast<size_t>(k)];
        if (std::abs(diff) == 0.0) diff = Cx(1e-14, 1e-14);
        repulse += 1.0 / diff;
      }
      Cx denom = 1.0 - newton * repulse;
      Cx step = (std::abs(denom) == 0.0) ? newton : newton / denom;
      z[static_cast<size_t>(j)] = zj - step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zj)));
    }
    if (max_step < 1e-15) break;
  }

  // Newton polish; keep a step only when it improves the residual.
  for (auto& zj : z) {
    for (int it = 0; it < 3; ++it) {
      Cx pv = horner(c, zj);
      Cx dv = horner(dc, zj);
      if (std::abs(dv) == 0.0) break;
      Cx cand = zj - pv / dv;
      if (std::abs(horner(c, cand)) < std::abs(pv)) zj = cand;
      else break;
    }
  }

  std::sort(z.begin(), z.end(), [](const Cx& a, const Cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  RootResult result;
  result.iterations = iterations;
  result.roots = z;
  result.residuals.reserve(z.size());
  bool ok = true;
  for (const auto& zj : z) {
    double res = std::abs(horner(c, zj)) / (eval_scale(c, zj) + 1e-300);
    result.residuals.push_back(res);
    ok = ok && res <= tol;
  }
  if (!ok)
    throw root_convergence_error("root finding did not reach the residual target",
                                 result.roots, result.residuals);

  const double cluster_radius = 1e-6 * cauchy;
  for (size_t i = 0; i < z.size();) {
    size_t j = i;
    Cx sum(0.0, 0.0);
    while (j < z.size() && std::abs(z[j] - z[i]) <= cluster_radius) {
      sum += z[j];
      ++j;
    }
    result.clustered.push_back({sum / double(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return result;
}

}  // namespace billiards
