#include "lsa/algebra.hpp"

#include "lsa/errors.hpp"

namespace lsa {

Algebra::Algebra(std::string name, std::size_t dim) : name_(std::move(name)), dim_(dim), c_(dim * dim * dim, 0) {}

Algebra::Algebra(std::string name, std::size_t dim, std::vector<Rational> constants)
    : name_(std::move(name)), dim_(dim), c_(std::move(constants)) {
  if (c_.size() != dim * dim * dim) throw DimensionError("Algebra: expected dim^3 structure constants");
}

void Algebra::set(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("Algebra::set: index out of range");
  c_[(i * dim_ + j) * dim_ + k] = v;
  validated_ = false;
}

QVector Algebra::basis_product(std::size_t i, std::size_t j) const {
  QVector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

QVector Algebra::product(const QVector& x, const QVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("Algebra::product: length mismatch");
  QVector r(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) r[k] += w * c(i, j, k);
    }
  }
  return r;
}

QVector Algebra::bracket(const QVector& x, const QVector& y) const { return sub(product(x, y), product(y, x)); }

QMatrix Algebra::left(const QVector& a) const {
  QMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    QVector col = product(a, unit_vector(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

QMatrix Algebra::right(const QVector& a) const {
  QMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    QVector col = product(unit_vector(dim_, i), a);
    for (std::size_t k = 0; k < dim_; ++k) m(k, i) = col[k];
  }
  return m;
}

Validation validate_lsa(const Algebra& a) {
  const std::size_t n = a.dim();
  Validation v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const QVector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        QVector lhs = sub(a.product(a.basis_product(i, j), ek), a.product(ei, a.basis_product(j, k)));
        QVector rhs = sub(a.product(a.basis_product(j, i), ek), a.product(ej, a.basis_product(i, k)));
        QVector res = sub(lhs, rhs);
        if (!is_zero(res)) {
          v.violation = Violation{i, j, k, res};
          v.algebra = a;
          v.algebra.validated_ = false;
          return v;
        }
      }
  v.ok = true;
  v.algebra = a;
  v.algebra.validated_ = true;
  return v;
}

std::string to_string(const Violation& v) {
  return "(" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) +
         ") residual " + to_string(v.residual);
}

Algebra validated(const Algebra& a) {
  Validation v = validate_lsa(a);
  if (!v.ok) throw CodedError("VIOLATION", to_string(*v.violation));
  return v.algebra;
}

void require_validated(const Algebra& a) {
  if (!a.validated()) throw PreconditionError("algebra '" + a.name() + "' has not passed validate_lsa");
}

void require_dim_cap(const Algebra& a, std::size_t max_dim) {
  if (a.dim() > max_dim)
    throw CapExceeded("dimension " + std::to_string(a.dim()) + " exceeds cap " + std::to_string(max_dim));
}

OperatorField left_field(const Algebra& a) {
  require_validated(a);
  const std::size_t n = a.dim();
  PolyMatrix m(n, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      QVector lin(n);
      for (std::size_t i = 0; i < n; ++i) lin[i] = a.c(i, j, k);
      m(k, j) = MPoly::linear(lin);
    }
  return {OperatorKind::L, m};
}

OperatorField right_field(const Algebra& a) {
  require_validated(a);
  const std::size_t n = a.dim();
  PolyMatrix m(n, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      QVector lin(n);
      for (std::size_t j = 0; j < n; ++j) lin[j] = a.c(i, j, k);
      m(k, i) = MPoly::linear(lin);
    }
  return {OperatorKind::R, m};
}

QVector trace_left_covector(const Algebra& a) {
  QVector t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) t[i] = a.left(unit_vector(a.dim(), i)).trace();
  return t;
}

QVector trace_right_covector(const Algebra& a) {
  QVector t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) t[i] = a.right(unit_vector(a.dim(), i)).trace();
  return t;
}

MPoly trace_left(const Algebra& a) { return left_field(a).entries.trace(); }
MPoly trace_right(const Algebra& a) { return right_field(a).entries.trace(); }

TraceForm trace_form(const Algebra& a) {
  require_validated(a);
  const std::size_t n = a.dim();
  std::vector<QMatrix> r;
  for (std::size_t i = 0; i < n; ++i) r.push_back(a.right(unit_vector(n, i)));
  const QVector trr = trace_right_covector(a);
  TraceForm tf{QMatrix(n, n), false};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      tf.tau(i, j) = (r[i] * r[j]).trace();
      require(tf.tau(i, j) == dot(trr, a.basis_product(i, j)), "trace form: tr R(e_i)R(e_j) != tr R(e_i e_j)");
    }
  tf.nondegenerate = n == 0 || det(tf.tau) != 0;
  return tf;
}

Signature signature(const QMatrix& s) {
  if (!is_symmetric(s)) throw PreconditionError("signature: matrix not symmetric");
  QMatrix m = s;
  const std::size_t n = m.rows();
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && m(i, i) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // all remaining diagonal entries vanish; create one via e_i -> e_i + e_j
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && m(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) break;
      for (std::size_t k = 0; k < n; ++k) m(bi, k) += m(bj, k);
      for (std::size_t k = 0; k < n; ++k) m(k, bi) += m(k, bj);
      p = bi;
    }
    const Rational piv = m(p, p);
    (piv > 0 ? sig.positive : sig.negative)++;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, p) == 0) continue;
      const Rational f = m(i, p) / piv;
      for (std::size_t k = 0; k < n; ++k) m(i, k) -= f * m(p, k);
      for (std::size_t k = 0; k < n; ++k) m(k, i) -= f * m(k, p);
    }
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

MPoly char_poly_lsa(const Algebra& a, std::size_t max_dim) {
  require_validated(a);
  require_dim_cap(a, max_dim);
  const std::size_t n = a.dim();
  PolyMatrix m = PolyMatrix::identity(n, n) + right_field(a).entries;
  MPoly p = n == 0 ? MPoly::constant(0, 1) : poly_det(m);
  require(p.constant_term() == 1, "char poly: P(0) != 1");
  require(p.degree() <= static_cast<int>(n), "char poly: degree exceeds dimension");
  require(p.homogeneous_component(1) == MPoly::linear(trace_right_covector(a)), "char poly: linear part != tr R");
  return p;
}

Algebra transport(const Algebra& a, const QMatrix& b) {
  const std::size_t n = a.dim();
  if (b.rows() != n || b.cols() != n) throw DimensionError("transport: basis matrix shape");
  auto inv = inverse(b);
  if (!inv) throw PreconditionError("transport: basis matrix is singular");
  Algebra t(a.name(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QVector coords = *inv * a.product(b.col(i), b.col(j));
      for (std::size_t k = 0; k < n; ++k) t.set(i, j, k, coords[k]);
    }
  return t;
}

}  // namespace lsa
