#ifndef BILLIARDS_HANKEL_HPP
#define BILLIARDS_HANKEL_HPP

#include <stdexcept>
#include <vector>

#include "billiards/polynomial.hpp"
#include "billiards/rational.hpp"

namespace billiards {

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const Poly& x) { return x.is_zero(); }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Poly ring_exact_div(const Poly& a, const Poly& b) { return exact_div(a, b); }

/// Exact determinant of the m x m Hankel matrix with entry (i,j) = seq[i+j+offset]
/// (1-based i,j), by Bareiss fraction-free elimination. Every intermediate
/// division is exact over the coefficient ring.
template <class R>
R hankel_det(const std::vector<R>& seq, int m, int offset) {
  if (m < 1) throw std::invalid_argument("hankel_det: m must be positive");
  int top = 2 * m + offset;
  if (top < 0 || static_cast<size_t>(top) >= seq.size() || 2 + offset < 0)
    throw std::invalid_argument("hankel_det: sequence too short for requested matrix");

  std::vector<std::vector<R>> a(static_cast<size_t>(m), std::vector<R>(static_cast<size_t>(m), R(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = seq[static_cast<size_t>(i + j + 2 + offset)];

  bool negate = false;
  R prev = R(1);
  for (int k = 0; k + 1 < m; ++k) {
    if (ring_is_zero(a[k][k])) {
      int swap_row = -1;
      for (int r = k + 1; r < m; ++r)
        if (!ring_is_zero(a[r][k])) { swap_row = r; break; }
      if (swap_row < 0) return R(0);  // zero column below the pivot
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
      negate = !negate;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        a[i][j] = ring_exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  R det = a[static_cast<size_t>(m - 1)][static_cast<size_t>(m - 1)];
  return negate ? R(0) - det : det;
}

}  // namespace billiards

#endif
