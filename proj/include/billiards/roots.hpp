#ifndef BILLIARDS_ROOTS_HPP
#define BILLIARDS_ROOTS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace billiards {

struct RootCluster {
  std::complex<double> value;
  int multiplicity = 1;
};

struct RootResult {
  std::vector<std::complex<double>> roots;      // deg(p) roots, deterministic order
  std::vector<double> residuals;                // |p(root)| / scale(p, root)
  std::vector<RootCluster> clustered;           // roots merged within the cluster radius
  int iterations = 0;
};

/// Raised when the simultaneous iteration fails to meet the residual target
/// within the iteration cap; carries the best iterate for diagnostics.
class root_convergence_error : public std::runtime_error {
 public:
  root_convergence_error(std::string what, std::vector<std::complex<double>> best,
                         std::vector<double> residuals)
      : std::runtime_error(std::move(what)), best_roots(std::move(best)),
        best_residuals(std::move(residuals)) {}
  std::vector<std::complex<double>> best_roots;
  std::vector<double> best_residuals;
};

/// All complex roots of the polynomial with the given ascending coefficients,
/// by Aberth-Ehrlich simultaneous iteration from a deterministic start
/// (roots of unity scaled by the Cauchy bound). Each returned root satisfies
/// |p(root)| <= tol * sum_i |a_i| |root|^i.
RootResult find_roots(const std::vector<std::complex<double>>& coeffs, double tol,
                      int max_iterations = 400);

}  // namespace billiards

#endif
