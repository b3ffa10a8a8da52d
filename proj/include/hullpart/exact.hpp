#pragma once

// Exact sign predicates over double-precision inputs.
//
// Every predicate evaluates a small polynomial in the input coordinates with a
// floating-point filter first; when the filter cannot certify the sign, the
// polynomial is re-evaluated as a non-overlapping expansion (fma products and
// two-sum accumulation), which is exact barring overflow or underflow.

#include <cmath>
#include <limits>

namespace hullpart::exact {

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
inline constexpr double kFilterBound = (3.0 + 16.0 * kEps) * kEps;

/// Sign of l1*r1 - sign2*l2*r2 with factors given as differences
/// {l1a, l1b, r1a, r1b, l2a, l2b, r2a, r2b}; exact, without the filter.
int diff_product_sign_exact(const double (&v)[8], double sign2) noexcept;

inline int filtered_sign(const double (&v)[8], double sign2) noexcept {
  const double p1 = (v[0] - v[1]) * (v[2] - v[3]);
  const double p2 = sign2 * ((v[4] - v[5]) * (v[6] - v[7]));
  const double det = p1 - p2;
  const double bound = kFilterBound * (std::fabs(p1) + std::fabs(p2));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return diff_product_sign_exact(v, sign2);
}

}  // namespace detail

/// Sign of cross(b - a, d - c) = (bx - ax)(dy - cy) - (by - ay)(dx - cx).
inline int cross_sign(double ax, double ay, double bx, double by,
                      double cx, double cy, double dx, double dy) noexcept {
  const double v[8] = {bx, ax, dy, cy, by, ay, dx, cx};
  return detail::filtered_sign(v, 1.0);
}

/// Sign of dot(b - a, d - c) = (bx - ax)(dx - cx) + (by - ay)(dy - cy).
inline int dot_sign(double ax, double ay, double bx, double by,
                    double cx, double cy, double dx, double dy) noexcept {
  const double v[8] = {bx, ax, dx, cx, by, ay, dy, cy};
  return detail::filtered_sign(v, -1.0);
}

}  // namespace hullpart::exact
