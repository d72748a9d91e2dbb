#include "lsa/graph_extension.hpp"

#include "lsa/errors.hpp"

namespace lsa {

void check_hessian(const Algebra& base, const QMatrix& h) {
  const std::size_t m = base.dim();
  if (h.rows() != m || h.cols() != m) throw DimensionError("metric size != base dimension");
  if (!is_symmetric(h)) throw CodedError("NOT_HESSIAN", "metric is not symmetric");
  if (det(h) == 0) throw CodedError("NOT_HESSIAN", "metric is degenerate");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const QVector ei = unit_vector(m, i), ej = unit_vector(m, j), ek = unit_vector(m, k);
        const Rational v = dot(base.bracket(ei, ej), h * ek) - dot(ei, h * base.basis_product(j, k)) +
                           dot(ej, h * base.basis_product(i, k));
        if (v != 0)
          throw CodedError("NOT_HESSIAN", "cubic form not symmetric at (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
      }
}

void check_derivation(const Algebra& base, const QMatrix& d) {
  const std::size_t m = base.dim();
  if (d.rows() != m || d.cols() != m) throw DimensionError("derivation size != base dimension");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const QVector ei = unit_vector(m, i), ej = unit_vector(m, j);
      if (d * base.basis_product(i, j) != add(base.product(d * ei, ej), base.product(ei, d * ej)))
        throw CodedError("NOT_DERIVATION", "Leibniz rule fails at (" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ")");
    }
}

void check_compatible(const QMatrix& h, const QMatrix& d) {
  if (d.transpose() * h + h * d != h) throw CodedError("NOT_COMPATIBLE", "D + D* != I");
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  return make_rational(num(rng), den(rng));
}

}  // namespace

std::size_t check_product_formula(const Algebra& base, const QMatrix& h, const QMatrix& d, const Algebra& ext,
                                  std::size_t count, std::mt19937_64& rng) {
  const std::size_t m = base.dim();
  std::size_t checked = 0, draws = 0;
  while (checked < count) {
    if (++draws > 1000 * count) throw InternalError("product formula: could not sample regular points");
    QVector x(m);
    for (auto& v : x) v = random_rational(rng);
    const Rational a = random_rational(rng);
    const QMatrix ir = QMatrix::identity(m) + base.right(x);
    auto inv = inverse(ir);
    if (!inv) continue;  // I + R_B(x) singular: redraw
    QVector xa = x;
    xa.push_back(a);
    const Rational lhs = det(QMatrix::identity(m + 1) + ext.right(xa));
    const Rational rhs = det(ir) * (1 + a - dot(x, h * (*inv * (d * x))));
    require(lhs == rhs, "graph extension: char-poly product formula fails at " + to_string(xa));
    ++checked;
  }
  return checked;
}

MPoly complete_extension_char_poly(const Algebra& base, const QMatrix& h, const QMatrix& d) {
  const std::size_t m = base.dim(), nv = m + 1;
  PolyMatrix rb(m, m, nv);
  {
    PolyMatrix r = right_field(base).entries;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) rb(i, j) = r(i, j).extend(nv);
  }
  std::vector<MPoly> x;
  for (std::size_t i = 0; i < m; ++i) x.push_back(MPoly::variable(nv, i));
  std::vector<MPoly> w = PolyMatrix::constant(d, nv) * x, sum = w;
  for (std::size_t l = 1; l < m; ++l) {
    w = rb * w;
    for (auto& p : w) p = -p;
    for (std::size_t i = 0; i < m; ++i) sum[i] += w[i];
  }
  MPoly p = MPoly::constant(nv, 1) + MPoly::variable(nv, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (h(i, j) != 0) p -= h(i, j) * (x[i] * sum[j]);
  return p;
}

GraphExtension graph_extend(const Algebra& base, const QMatrix& h, const QMatrix& d, std::uint64_t seed) {
  require_validated(base);
  check_hessian(base, h);
  check_derivation(base, d);
  check_compatible(h, d);
  const std::size_t m = base.dim(), n = m + 1, top = m;
  Algebra ext(base.name() + "_ext", n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) ext.set(i, j, k, base.c(i, j, k));
      ext.set(i, j, top, h(i, j));
      ext.set(top, j, i, d(i, j));
    }
  ext.set(top, top, top, 1);
  Validation v = validate_lsa(ext);
  require(v.ok, "graph extension is not left-symmetric");
  GraphExtension g{v.algebra, QMatrix(n, n), 0};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g.hhat(i, j) = h(i, j);
  g.hhat(top, top) = 1;

  const QVector trb = trace_right_covector(base), tra = trace_right_covector(g.result);
  QVector expect = trb;
  expect.push_back(1);
  require(tra == expect, "graph extension: tr R(x + aD) != tr R_B(x) + a");
  const QMatrix tau_a = trace_form(g.result).tau, tau_b = trace_form(base).tau;
  QMatrix tau_b_ext(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) tau_b_ext(i, j) = tau_b(i, j);
  require(g.hhat == tau_a - tau_b_ext, "graph extension: hhat != tau_A - tau_B");

  if (is_zero(trb)) {
    require(g.hhat == tau_a, "complete base: hhat != tau");
    require(char_poly_lsa(g.result, n) == complete_extension_char_poly(base, h, d),
            "complete base: closed-form characteristic polynomial mismatch");
  } else {
    std::mt19937_64 rng(seed);
    g.sampled_points = check_product_formula(base, h, d, g.result, 10, rng);
  }
  return g;
}

}  // namespace lsa
