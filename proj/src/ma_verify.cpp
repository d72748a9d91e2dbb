#include "lsa/ma_verify.hpp"

#include <random>
#include <set>

#include "lsa/errors.hpp"
#include "lsa/koszul.hpp"

namespace lsa {

namespace {

bool is_axis(const MPoly& p, const QVector& v, Rational& lambda) {
  const MPoly dv = directional_derivative(p, v);
  if (!dv.is_constant()) return false;
  lambda = dv.constant_term();
  return true;
}

}  // namespace

std::optional<Axis> translational_axis(const MPoly& p, const std::optional<QVector>& candidate) {
  const std::size_t n = p.nvars();
  if (candidate) {
    if (candidate->size() != n) throw DimensionError("translational_axis: candidate length != number of variables");
    Axis ax{*candidate, 0};
    if (is_zero(ax.v) || !is_axis(p, ax.v, ax.lambda)) return std::nullopt;
    return ax;
  }
  if (n == 0) return std::nullopt;
  const std::vector<MPoly> grad = gradient(p);
  std::set<Monomial, GrlexLess> mons;
  for (const auto& g : grad)
    for (const auto& [m, c] : g.terms())
      if (total_degree(m) > 0) mons.insert(m);
  QMatrix sys(mons.size(), n);
  std::size_t row = 0;
  for (const auto& m : mons) {
    for (std::size_t i = 0; i < n; ++i) sys(row, i) = grad[i].coefficient(m);
    ++row;
  }
  const std::vector<QVector> basis = kernel_basis(sys);
  if (basis.empty()) return std::nullopt;
  for (const auto& b : basis) {
    Axis ax{b, 0};
    require(is_axis(p, b, ax.lambda), "translational_axis: kernel vector is not an axis");
    if (ax.lambda != 0) {
      ax.v = scale(1 / ax.lambda, b);
      ax.lambda = 1;
      return ax;
    }
  }
  Axis ax{basis.front(), 0};
  for (const auto& x : ax.v)
    if (x != 0) {
      ax.v = scale(1 / x, ax.v);
      break;
    }
  return ax;
}

bool euler_check(const Algebra& a, const MPoly& p, const QVector& r) {
  const std::size_t n = a.dim();
  if (p.nvars() != n || r.size() != n) throw DimensionError("euler_check: size mismatch");
  const QMatrix lr = a.left(r);
  MPoly lhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly e = MPoly::constant(n, r[i]) + MPoly::linear(lr.row(i));
    lhs += p.derivative(i) * e;
  }
  return lhs == p;
}

bool scaling_identity_holds(const MPoly& p, const Rational& c) {
  return poly_det(twisted_hessian(p, c)) == c * poly_det(twisted_hessian(p, 1));
}

MAReport ma_constant(const MPoly& p, const Algebra* a) {
  MAReport r;
  r.axis = translational_axis(p);
  r.determinant = poly_det(twisted_hessian(p, 1));
  if (r.determinant.is_constant()) {
    r.kappa = r.determinant.constant_term();
    r.sign_of_kappa = sign(*r.kappa);
  }
  const std::size_t m = p.nvars();
  if (a) {
    require_validated(*a);
    if (a->dim() != m) throw DimensionError("ma_constant: polynomial variables != algebra dimension");
    const QVector tl = trace_left_covector(*a), tr = trace_right_covector(*a);
    r.trace_condition = scale(2, tl) == scale(static_cast<long>(m) + 1, tr);
    if (trace_form(*a).nondegenerate) r.euler_identity = euler_check(*a, p, principal_idempotent(*a).u);
    r.convention = "H(e^P) = kappa e^(nP), n = dim A = " + std::to_string(m);
  } else {
    r.convention = "H(e^P) = kappa e^(mP), m = number of variables = " + std::to_string(m);
  }
  return r;
}

GraphRestriction graph_restrict(const MPoly& p, const QVector& v) {
  const std::size_t n = p.nvars();
  if (v.size() != n) throw DimensionError("graph_restrict: axis length != number of variables");
  if (is_zero(v)) throw PreconditionError("graph_restrict: axis coordinate zero in every slot");
  Rational lambda;
  if (!is_axis(p, v, lambda) || lambda != 1) throw PreconditionError("graph_restrict: P(x + t v) != P(x) + t");
  GraphRestriction g;
  g.coordinate = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (abs(v[i]) > abs(v[g.coordinate])) g.coordinate = i;
  g.v_k = v[g.coordinate];
  const std::size_t k = g.coordinate, m = n - 1;
  std::vector<MPoly> images;
  for (std::size_t i = 0, w = 0; i < n; ++i) images.push_back(i == k ? MPoly(m) : MPoly::variable(m, w++));
  g.f = g.v_k * (MPoly::constant(m, 1) - p.substitute(images));
  g.hessian_det = m == 0 ? MPoly::constant(0, 1) : poly_det(hessian(g.f));

  const MPoly q = poly_det(twisted_hessian(p, 1));
  Rational factor = 1;
  for (std::size_t i = 0; i <= n; ++i) factor *= g.v_k;
  const int parity = m % 2 == 0 ? 1 : -1;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (int s = 0; s < 5; ++s) {
    QVector w(m), x(n);
    for (std::size_t i = 0, j = 0; i < n; ++i)
      if (i != k) x[i] = w[j++] = make_rational(num(rng), den(rng));
    require(parity * g.hessian_det.evaluate(w) == factor * q.evaluate(x),
            "graph_restrict: (-1)^(n-1) H(f) != v_k^(n+1) det(Hess P + dP dP) at " + to_string(x));
  }
  return g;
}

}  // namespace lsa
