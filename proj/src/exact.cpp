#include "hullpart/exact.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace hullpart::exact {
namespace {

int sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

// Non-overlapping expansion with components in increasing magnitude.
class Expansion {
 public:
  void add(double b) noexcept {
    double q = b;
    std::size_t out = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      const double sum = q + terms_[i];
      const double bv = sum - q;
      const double av = sum - bv;
      const double err = (q - av) + (terms_[i] - bv);
      q = sum;
      if (err != 0.0) terms_[out++] = err;
    }
    if (q != 0.0) terms_[out++] = q;
    size_ = out;
  }

  void add_product(double a, double b) noexcept {
    const double p = a * b;
    add(std::fma(a, b, -p));
    add(p);
  }

  int sign() const noexcept { return size_ == 0 ? 0 : sign_of(terms_[size_ - 1]); }

 private:
  // 16 product terms can never yield more than 16 non-zero components.
  std::array<double, 17> terms_{};
  std::size_t size_ = 0;
};

bool diff_exact(double a, double b) noexcept {
  const double d = a - b;
  const double bv = a - d;
  const double av = d + bv;
  return (a - av) + (bv - b) == 0.0;
}

bool product_exact(double a, double b) noexcept {
  return std::fma(a, b, -(a * b)) == 0.0;
}

}  // namespace

int detail::diff_product_sign_exact(const double (&v)[8], double sign2) noexcept {
  const double l1 = v[0] - v[1];
  const double r1 = v[2] - v[3];
  const double l2 = v[4] - v[5];
  const double r2 = v[6] - v[7];

  // Exact when all differences and products happen to be representable.
  if (diff_exact(v[0], v[1]) && diff_exact(v[2], v[3]) && diff_exact(v[4], v[5]) &&
      diff_exact(v[6], v[7]) && product_exact(l1, r1) && product_exact(l2, r2)) {
    return sign_of(l1 * r1 - sign2 * (l2 * r2));
  }

  // (a - b)(c - d) = ac - ad - bc + bd, for both products.
  Expansion e;
  e.add_product(v[0], v[2]);
  e.add_product(-v[0], v[3]);
  e.add_product(-v[1], v[2]);
  e.add_product(v[1], v[3]);
  const double s = -sign2;
  e.add_product(s * v[4], v[6]);
  e.add_product(-s * v[4], v[7]);
  e.add_product(-s * v[5], v[6]);
  e.add_product(s * v[5], v[7]);
  return e.sign();
}

}  // namespace hullpart::exact
