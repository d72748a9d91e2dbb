#include "lsa/classify.hpp"

#include "lsa/errors.hpp"

namespace lsa {

std::optional<QVector> nonvanishing_point(const MPoly& p, unsigned bound) {
  if (p.is_zero()) return std::nullopt;
  const std::size_t n = p.nvars();
  std::vector<unsigned> digit(n, 0);
  for (;;) {
    QVector pt(n);
    for (std::size_t i = 0; i < n; ++i) pt[i] = digit[i];
    if (p.evaluate(pt) != 0) return pt;
    std::size_t i = 0;
    while (i < n && digit[i] == bound) digit[i++] = 0;
    if (i == n) return std::nullopt;
    ++digit[i];
  }
}

namespace {

Predicate yes(std::string w, QVector v = {}) { return {true, std::move(w), {}, std::move(v)}; }
Predicate no(std::string w, QVector v = {}, std::vector<std::size_t> idx = {}) {
  return {false, std::move(w), std::move(idx), std::move(v)};
}

std::optional<std::size_t> first_nonzero(const QVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return std::nullopt;
}

// A point where some entry of the polynomial matrix does not vanish.
QVector nonzero_point(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        auto pt = nonvanishing_point(m(i, j), static_cast<unsigned>(m(i, j).degree()));
        require(pt.has_value(), "nonzero polynomial vanishes on its degree grid");
        return *pt;
      }
  throw InternalError("nonzero_point: matrix is zero");
}

// Coordinates of v in a subspace given by its reduced echelon basis.
QVector coordinates(const Subspace& s, const QVector& v) {
  QVector c(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) c[r] = v[s.pivots()[r]];
  return c;
}

Predicate unimodularity(const Algebra& a, const QVector& trr) {
  const std::size_t n = a.dim();
  std::vector<QVector> rows;
  if (!is_zero(trr)) rows.push_back(trr);
  Subspace b = rows.empty() ? Subspace::whole(n) : kernel(QMatrix::from_rows(rows, n));
  for (std::size_t r = 0; r < b.dim(); ++r) {
    const QVector& x = b.basis()[r];
    Rational tr = 0;
    for (std::size_t c = 0; c < b.dim(); ++c) {
      QVector br = a.bracket(x, b.basis()[c]);
      require(b.contains(br), "ker tr R is not closed under the bracket");
      tr += coordinates(b, br)[c];
    }
    if (tr != 0) return no("tr ad(x) on ker tr R is " + to_string(tr), x);
  }
  return yes("tr ad vanishes on ker tr R (dim " + std::to_string(b.dim()) + ")");
}

}  // namespace

ClassificationReport classify(const Algebra& a, const ClassifyOptions& opts) {
  require_validated(a);
  require_dim_cap(a, opts.max_dim);
  const std::size_t n = a.dim();
  ClassificationReport rep;
  rep.is_lsa = yes("left-symmetry holds on all basis triples");

  const QVector trr = trace_right_covector(a), trl = trace_left_covector(a);
  if (auto i = first_nonzero(trr))
    rep.complete = no("tr R(e" + std::to_string(*i + 1) + ") = " + to_string(trr[*i]), trr, {*i});
  else
    rep.complete = yes("tr R = 0", trr);

  if (opts.thorough) {
    PolyMatrix rp = right_field(a).entries.pow(static_cast<unsigned>(n));
    rep.complete_by_power = rp.is_zero();
    require(*rep.complete_by_power == rep.complete.holds, "completeness: tr R test and R(X)^n test disagree");
    if (rp.is_zero()) rep.right_nil = yes("R(X)^" + std::to_string(n) + " = 0 as a polynomial identity");
    else {
      QVector pt = nonzero_point(rp);
      rep.right_nil = no("R(a)^" + std::to_string(n) + " != 0 at a = " + to_string(pt), pt);
    }
  } else if (rep.complete.holds) {
    rep.right_nil = yes("tr R = 0, equivalent to R(X)^" + std::to_string(n) + " = 0");
  } else {
    const std::size_t i = rep.complete.indices[0];
    rep.right_nil = no("R(e" + std::to_string(i + 1) + ") has nonzero trace", unit_vector(n, i), {i});
  }

  if (auto i = first_nonzero(trl)) {
    rep.left_nil = no("L(e" + std::to_string(*i + 1) + ") has nonzero trace", unit_vector(n, *i), {*i});
  } else {
    PolyMatrix lp = left_field(a).entries.pow(static_cast<unsigned>(n));
    if (lp.is_zero()) rep.left_nil = yes("L(X)^" + std::to_string(n) + " = 0 as a polynomial identity");
    else {
      QVector pt = nonzero_point(lp);
      rep.left_nil = no("L(a)^" + std::to_string(n) + " != 0 at a = " + to_string(pt), pt);
    }
  }

  rep.series = series(a);
  const auto& s = rep.series;
  if (s.right_nilpotent)
    rep.right_nilpotent = yes("rnil^" + std::to_string(s.rnil.size()) + " = 0");
  else
    rep.right_nilpotent = no("rnil stabilizes at dimension " + std::to_string(s.rnil.back().dim()),
                             s.rnil.back().basis().front());
  if (s.nilpotent)
    rep.nilpotent = yes("triv^" + std::to_string(s.triv.size()) + " = A");
  else
    rep.nilpotent = no("triv stabilizes at dimension " + std::to_string(s.triv.back().dim()),
                       s.triv.back().complement().front());
  if (s.lie_solvable)
    rep.lie_solvable = yes("derived length " + std::to_string(s.lie_derived.size() - 1));
  else
    rep.lie_solvable = no("derived series stabilizes at dimension " + std::to_string(s.lie_derived.back().dim()),
                          s.lie_derived.back().basis().front());
  if (s.lie_nilpotent)
    rep.lie_nilpotent = yes("lower central series reaches 0 after " + std::to_string(s.lie_lower_central.size() - 1) +
                            " steps");
  else
    rep.lie_nilpotent = no("lower central series stabilizes at dimension " +
                               std::to_string(s.lie_lower_central.back().dim()),
                           s.lie_lower_central.back().basis().front());

  const Subspace all = Subspace::whole(n);
  const Subspace products = product_span(a, all, all);
  if (products.is_whole()) rep.perfect = yes("A.A = A");
  else rep.perfect = no("A.A has dimension " + std::to_string(products.dim()), products.complement().front());

  const Subspace derived = bracket_span(a, all, all);
  rep.derived_codim = n - derived.dim();
  require(n == 0 || rep.derived_codim >= 1, "Lie algebra of an LSA is perfect");
  const Subspace derived2 = bracket_span(a, derived, derived);
  if (derived2.is_zero()) rep.derived_abelian = yes("[[A,A],[A,A]] = 0");
  else rep.derived_abelian = no("[[A,A],[A,A]] has dimension " + std::to_string(derived2.dim()), derived2.basis().front());

  TraceForm tf = trace_form(a);
  rep.trace_signature = signature(tf.tau);
  if (tf.nondegenerate) rep.trace_form_nondegenerate = yes("det tau = " + to_string(det(tf.tau)));
  else {
    QVector k = kernel_basis(tf.tau).front();
    rep.trace_form_nondegenerate = no("tau(v, .) = 0 for v = " + to_string(k), k);
  }

  rep.ker_trR_unimodular = unimodularity(a, trr);
  if (tf.nondegenerate && !rep.complete.holds) {
    QVector r = *solve(tf.tau, trr);
    const Rational trr_r = dot(trr, r), trl_r = dot(trl, r);
    const bool identity = sub(scale(trr_r, trl), scale(trl_r, trr)) == zero_vector(n);
    require(identity == rep.ker_trR_unimodular.holds, "unimodularity: direct test and tr R(r) tr L = tr L(r) tr R disagree");
  }

  rep.triangular = triangularize(a);
  if (rep.triangular.ok) rep.triangularizable = yes("invariant flag found");
  else rep.triangularizable = no(to_string(rep.triangular.reason) + ": " + rep.triangular.detail);

  const QVector cond = sub(scale(2, trl), scale(Rational(static_cast<long>(n + 1)), trr));
  if (auto i = first_nonzero(cond))
    rep.condition_2trL_eq_n1trR =
        no("2 tr L(e" + std::to_string(*i + 1) + ") - " + std::to_string(n + 1) + " tr R(e" + std::to_string(*i + 1) +
               ") = " + to_string(cond[*i]),
           cond, {*i});
  else
    rep.condition_2trL_eq_n1trR = yes("2 tr L = " + std::to_string(n + 1) + " tr R");
  return rep;
}

}  // namespace lsa
