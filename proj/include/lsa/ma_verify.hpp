#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"

namespace lsa {

struct Axis {
  QVector v;
  Rational lambda;  // P(x + t v) = P(x) + lambda t
};

// With a candidate: checks the identity for that vector. Without: the axes form the kernel of
// v -> (non-constant part of dP(v)); the representative is the first basis vector with
// lambda != 0 scaled to lambda = 1, else the first basis vector with leading entry 1.
std::optional<Axis> translational_axis(const MPoly& p, const std::optional<QVector>& candidate = std::nullopt);

struct MAReport {
  std::optional<Axis> axis;
  MPoly determinant;               // det(Hess P + dP (x) dP)
  std::optional<Rational> kappa;   // set iff the determinant is constant
  int sign_of_kappa = 0;
  std::optional<bool> trace_condition;  // 2 tr L = (n+1) tr R; algebra supplied
  std::optional<bool> euler_identity;   // algebra supplied with a principal idempotent
  std::string convention;               // which exponent the identity H(e^P) = kappa e^{mP} uses
};

MAReport ma_constant(const MPoly& p, const Algebra* a = nullptr);

// dP(r + r.x) == P as polynomials.
bool euler_check(const Algebra& a, const MPoly& p, const QVector& r);

// det(Hess P + c dP (x) dP) == c det(Hess P + dP (x) dP).
bool scaling_identity_holds(const MPoly& p, const Rational& c);

struct GraphRestriction {
  std::size_t coordinate;  // 0-based index k of the graph direction
  Rational v_k;
  MPoly f;                 // nvars - 1 variables, coordinates other than k in order
  MPoly hessian_det;       // H(f)
};

// Requires lambda = 1. On W = {x_k = 0}, f(w) = v_k (1 - P(w)), so that
// {P = 1} = {w + (1 - P(w)) v}. Asserts (-1)^{n-1} H(f) = v_k^{n+1} det(Hess P + dP (x) dP)
// at 5 random points of W.
GraphRestriction graph_restrict(const MPoly& p, const QVector& v);

}  // namespace lsa
