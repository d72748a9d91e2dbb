#pragma once

#include <optional>
#include <random>

#include "lsa/algebra.hpp"

namespace lsa {

struct GraphExtension {
  Algebra result;  // base basis first, D last
  QMatrix hhat;    // h (+) (1)
  // Number of random points at which the char-poly product formula was checked
  // (0 when the base is complete and the closed form was verified symbolically).
  std::size_t sampled_points = 0;
};

// h([x,y],z) - h(x, y o z) + h(y, x o z) = 0; throws CodedError NOT_HESSIAN.
void check_hessian(const Algebra& base, const QMatrix& h);
// Throws CodedError NOT_DERIVATION.
void check_derivation(const Algebra& base, const QMatrix& d);
// D + D* = I with respect to h; throws CodedError NOT_COMPATIBLE.
void check_compatible(const QMatrix& h, const QMatrix& d);

// (x + aD).(y + bD) = x o y + a Dy + (h(x,y) + ab) D.
GraphExtension graph_extend(const Algebra& base, const QMatrix& h, const QMatrix& d, std::uint64_t seed = 20240611);

// P_A(x + aD) = P_B(x) (1 + a - h(x, (I + R_B(x))^{-1} D x)) at `count` random rational
// points where I + R_B(x) is invertible. Returns the number of points checked.
std::size_t check_product_formula(const Algebra& base, const QMatrix& h, const QMatrix& d, const Algebra& ext,
                                  std::size_t count, std::mt19937_64& rng);

// 1 + a - h(x, sum_{l=0}^{dim B - 1} (-R_B(x))^l D x); valid when the base is complete.
MPoly complete_extension_char_poly(const Algebra& base, const QMatrix& h, const QMatrix& d);

}  // namespace lsa
