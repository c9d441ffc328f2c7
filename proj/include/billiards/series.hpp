#ifndef BILLIARDS_SERIES_HPP
#define BILLIARDS_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "billiards/polynomial.hpp"
#include "billiards/rational.hpp"

namespace billiards {

inline Rational half_of(const Rational& x) { return x / 2; }
inline Poly half_of(const Poly& x) { return x * Rational(1, 2); }

/// Truncated power series over an exact coefficient ring (Rational or Poly).
/// Operations respect truncation: the result order is the minimum of the
/// operand orders.
template <class R>
class Series {
 public:
  Series(std::vector<R> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.resize(static_cast<size_t>(order) + 1, R(0));
  }

  int order() const { return order_; }
  const R& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
  const std::vector<R>& coeffs() const { return c_; }

  friend Series operator*(const Series& a, const Series& b) {
    int order = std::min(a.order_, b.order_);
    std::vector<R> out(static_cast<size_t>(order) + 1, R(0));
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order && j <= b.order_; ++j)
        out[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    return Series(std::move(out), order);
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  std::vector<R> c_;
  int order_;
};

/// Square root of a series with constant term 1, to the given order.
/// Coefficients follow from matching r*r = s term by term:
///   r_k = (s_k - sum_{i=1}^{k-1} r_i r_{k-i}) / 2.
template <class R>
Series<R> series_sqrt(const Series<R>& s, int order) {
  if (order > s.order()) throw std::invalid_argument("series_sqrt: order exceeds input order");
  if (!(s.coeff(0) == R(1))) throw std::invalid_argument("series_sqrt: constant term must be 1");
  std::vector<R> r(static_cast<size_t>(order) + 1, R(0));
  r[0] = R(1);
  for (int k = 1; k <= order; ++k) {
    R acc = s.coeff(k);
    for (int i = 1; i < k; ++i) acc -= r[static_cast<size_t>(i)] * r[static_cast<size_t>(k - i)];
    r[static_cast<size_t>(k)] = half_of(acc);
  }
  return Series<R>(std::move(r), order);
}

}  // namespace billiards

#endif
