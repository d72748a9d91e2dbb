#include "lsa/koszul.hpp"

#include "lsa/errors.hpp"
#include "lsa/graph_extension.hpp"

namespace lsa {

KoszulData koszul_data(const Algebra& a, const QVector& lambda) {
  require_validated(a);
  const std::size_t n = a.dim();
  if (lambda.size() != n) throw DimensionError("koszul_data: lambda length != dim");
  KoszulData k;
  k.lambda = lambda;
  k.h = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k.h(i, j) = dot(lambda, a.basis_product(i, j));
  if (!is_symmetric(k.h)) throw CodedError("NOT_SYMMETRIC", "lambda does not vanish on [A,A]");
  if (det(k.h) == 0) throw CodedError("DEGENERATE_METRIC", "h = " + to_string(k.h));
  k.u = *solve(k.h, lambda);
  require(a.product(k.u, k.u) == k.u, "Koszul idempotent: u.u != u");
  k.rank = a.right(k.u).trace();
  require(is_integer(k.rank) && k.rank >= 1 && k.rank <= static_cast<long>(n), "Koszul idempotent: tr R(u) not in [1, n]");
  const Rational lu = dot(lambda, k.u);
  k.normalized = lu == 0 || lu == 1;
  return k;
}

KoszulData principal_idempotent(const Algebra& a) { return koszul_data(a, trace_right_covector(a)); }

KoszulData normalize(const Algebra& a, const KoszulData& k) {
  const Rational lu = dot(k.lambda, k.u);
  if (lu == 0 || lu == 1) return k;
  KoszulData out = koszul_data(a, scale(1 / lu, k.lambda));
  require(out.u == k.u, "normalization changed the idempotent");
  return out;
}

QMatrix adjoint(const QMatrix& m, const QMatrix& h) {
  auto hinv = inverse(h);
  if (!hinv) throw CodedError("DEGENERATE_METRIC", "adjoint with respect to a singular form");
  return *hinv * m.transpose() * h;
}

namespace {

Subspace ker_covector(const QVector& lambda) {
  if (is_zero(lambda)) return Subspace::whole(lambda.size());
  return kernel(QMatrix::from_rows({lambda}, lambda.size()));
}

}  // namespace

IdempotentReport idempotent_report(const Algebra& a, const KoszulData& k) {
  require_validated(a);
  const std::size_t n = a.dim();
  const QMatrix lu = a.left(k.u), ru = a.right(k.u), id = QMatrix::identity(n);
  const Subspace kl = ker_covector(k.lambda);
  IdempotentReport r;
  r.L_preserves_ker_lambda = kl.contains(image(lu, kl));
  r.R_preserves_ker_lambda = kl.contains(image(ru, kl));
  r.adjoint_identity = lu + adjoint(lu, k.h) == ru + id;
  r.R_self_adjoint = adjoint(ru, k.h) == ru;
  r.rank = static_cast<unsigned>(k.rank.get_num().get_ui());
  const QMatrix nn = ru - ru * ru;
  r.N_bound = std::max<unsigned>(r.rank, static_cast<unsigned>(n) - r.rank);
  QMatrix p = nn;
  for (unsigned q = 1; q <= n; ++q, p = p * nn)
    if (p.is_zero()) {
      r.N_nilpotent = true;
      r.N_index = q;
      break;
    }
  const QMatrix rn = ru.pow(static_cast<unsigned>(n));
  const Subspace fit0 = kernel(rn), fit1 = column_space(rn);
  r.fitting_zero_dim = fit0.dim();
  r.fitting_one_dim = fit1.dim();
  r.fitting_zero_in_ker_lambda = kl.contains(fit0);

  const Subspace kr = kernel(ru);
  r.ker_R_subalgebra_with_derivation = true;
  for (const auto& x : kr.basis())
    for (const auto& y : kr.basis()) {
      const QVector b = a.bracket(x, y);
      if (!kr.contains(b) || lu * b != add(a.bracket(lu * x, y), a.bracket(x, lu * y)))
        r.ker_R_subalgebra_with_derivation = false;
    }

  r.R_idempotent = ru * ru == ru;
  const Subspace span_u(n, {k.u});
  r.u_left_ideal = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!span_u.contains(a.product(unit_vector(n, i), k.u))) r.u_left_ideal = false;
  r.ker_R_eq_ker_lambda = kr == kl;
  const Rational lam_u = dot(k.lambda, k.u);
  const bool alt = lam_u != 0 && dot(k.u, k.h * k.u) == lam_u && r.R_idempotent && ru.trace() == 1 && r.u_left_ideal;
  require(alt == r.ker_R_eq_ker_lambda, "graph-extension recognizer: equivalent conditions disagree");
  r.L_invertible = det(lu) != 0;
  return r;
}

InducedAlgebra induced_algebra(const Algebra& a, const KoszulData& k0) {
  require_validated(a);
  const std::size_t n = a.dim();
  IdempotentReport rep = idempotent_report(a, k0);
  if (!rep.ker_R_eq_ker_lambda || dot(k0.lambda, k0.u) == 0)
    throw CodedError("RECOGNIZER_FAILED", "ker lambda != ker R(u)");
  const KoszulData k = normalize(a, k0);
  InducedAlgebra ind;
  ind.koszul = k;
  const Subspace kl = ker_covector(k.lambda);
  ind.basis = kl.basis();
  const std::size_t m = kl.dim();
  require(m + 1 == n, "ker lambda is not a hyperplane");
  auto coords = [&](const QVector& v) {
    require(kl.contains(v), "induced product leaves ker lambda");
    QVector c(m);
    for (std::size_t r = 0; r < m; ++r) c[r] = v[kl.pivots()[r]];
    return c;
  };
  Algebra base(a.name() + "_base", m);
  ind.metric = QMatrix(m, m);
  ind.derivation = QMatrix(m, m);
  const QMatrix lu = a.left(k.u);
  for (std::size_t i = 0; i < m; ++i) {
    const QVector& bi = ind.basis[i];
    for (std::size_t j = 0; j < m; ++j) {
      const QVector& bj = ind.basis[j];
      const Rational hij = dot(bi, k.h * bj);
      ind.metric(i, j) = hij;
      QVector c = coords(sub(a.product(bi, bj), scale(hij, k.u)));
      for (std::size_t t = 0; t < m; ++t) base.set(i, j, t, c[t]);
    }
    QVector d = coords(lu * bi);
    for (std::size_t t = 0; t < m; ++t) ind.derivation(t, i) = d[t];
  }
  ind.base = validated(base);
  check_hessian(ind.base, ind.metric);
  check_derivation(ind.base, ind.derivation);
  check_compatible(ind.metric, ind.derivation);
  return ind;
}

}  // namespace lsa
