#ifndef BILLIARDS_VERIFY_HPP
#define BILLIARDS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "billiards/billiard.hpp"
#include "billiards/cayley.hpp"

namespace billiards {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0.0;
};

struct ClosureThresholds {
  double closure = 1e-7;
  double tangency = 1e-9;
  double invariant_spread = 1e-9;
  double lambda_consistency = 1e-8;
};

// Exact-arithmetic identities: sqrt-series coefficients, series square root
// as an involution of squaring, rational field axioms on random operands.
CheckResult check_algebra_identities(std::uint64_t seed);

// det of the Catalan Hankel matrix (entries Cat_{i+j-1}) equals 1, m = 1..mmax.
CheckResult check_catalan_hankel(int mmax);

// Random integer-root polynomials of degree <= 8 recovered within 1e-9,
// plus the fixed quadratic/cubic reference root sets.
CheckResult check_root_finder(std::uint64_t seed);

// Closure polynomial for n = 3 equals the closed quadratic
//   -(1/(8 a^4 b^4)) ((a^2-b^2)^2 L^2 - 2(a^4 b^2 + a^2 b^4) L - 3 a^4 b^4)
// coefficient-exact after monic normalization, over random rational families.
CheckResult check_cayley3_identity(int samples, std::uint64_t seed);

// Same for n = 4 against the closed cubic.
CheckResult check_cayley4_identity(int samples, std::uint64_t seed);

// (2,1) triangular caustics: roots (20 +- 8 sqrt(13))/9 to 1e-10 and the
// 4-decimal reference values -0.9827, 5.4272.
CheckResult check_reference_roots_n3();

// (2,1) quadrilateral caustics: rational roots exactly {-4/3, -4/5, 4/3}.
CheckResult check_rational_roots_n4();

// Degree table for n = 3..nmax at (2,1) and for the circle. With
// literal_even_generic the even rows are pinned to n^2/4; otherwise to the
// determinant-structure value n^2/4 - 1. Also checks N <= deg <= bound.
CheckResult check_degree_table(int nmax, bool literal_even_generic);

// Poncelet closure over every admissible root for the given n values, with
// half real and half complex parameter starts per root.
CheckResult check_closure_grid(const ConfocalFamily& fam, const std::vector<int>& ns,
                               int starts_per_root, std::uint64_t seed,
                               const ClosureThresholds& thresholds = {});

// Traces at lambda away from every root must fail to close.
CheckResult check_negative_control(const ConfocalFamily& fam, int count, std::uint64_t seed,
                                   double min_closure = 1e-3, double min_distance = 0.1);

// Exactly eight degenerate triangular configurations with the required shape.
CheckResult check_degenerate_triangles(const ConfocalFamily& fam);

// The three distinguished 4-periodic orbits match the cubic's roots; the
// self-reflecting orbit has the expected vertices; the near-degenerate
// family (a close to sqrt(2) b) reports the collapse of the first caustic.
CheckResult check_special_quads();

// Invariant values 1/a^2, 1/b^2 for focal directions and reflection of focal
// lines through the other focus, at random points of the ellipse.
CheckResult check_focal_properties(const ConfocalFamily& fam, int points, std::uint64_t seed);

// Root-location inequalities for random rational a > b, all exact:
// n = 3: positive root and -b^2 < negative root < 0;
// n = 4: lambda_1 < -b^2 < lambda_2 < 0 < lambda_3 and the lambda_1 vs -a^2
// trichotomy against sign(a^2 - 2 b^2).
CheckResult check_root_location(int samples, std::uint64_t seed);

// Informational summary of caustic_roots for one family (always passes).
CheckResult caustic_summary(const ConfocalFamily& fam, int n);

}  // namespace billiards

#endif
