#include "lsa/poly_matrix.hpp"

#include <utility>

#include "lsa/errors.hpp"

namespace lsa {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, MPoly(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  PolyMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MPoly::constant(nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::constant(const QMatrix& q, std::size_t nvars) {
  PolyMatrix m(q.rows(), q.cols(), nvars);
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = MPoly::constant(nvars, q(i, j));
  return m;
}

QMatrix PolyMatrix::evaluate(const QVector& point) const {
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).evaluate(point);
  return q;
}

std::vector<std::vector<double>> PolyMatrix::evaluate(const std::vector<double>& point) const {
  std::vector<std::vector<double>> q(rows_, std::vector<double>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) q[i][j] = (*this)(i, j).evaluate(point);
  return q;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

MPoly PolyMatrix::trace() const {
  if (rows_ != cols_) throw DimensionError("trace of non-square PolyMatrix");
  MPoly t(nvars_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::pow(unsigned k) const {
  if (rows_ != cols_) throw DimensionError("pow of non-square PolyMatrix");
  PolyMatrix r = identity(rows_, nvars_);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("PolyMatrix +: shape mismatch");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("PolyMatrix -: shape mismatch");
  PolyMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("PolyMatrix *: shape mismatch");
  PolyMatrix r(a.rows(), b.cols(), a.nvars());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= c;
  return r;
}

std::vector<MPoly> operator*(const PolyMatrix& a, const std::vector<MPoly>& v) {
  if (a.cols() != v.size()) throw DimensionError("PolyMatrix-vector: shape mismatch");
  std::vector<MPoly> r(a.rows(), MPoly(a.nvars()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

namespace {

MPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return MPoly::constant(m.nvars(), 1);
  MPoly acc(m.nvars());
  int s = 1;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(idx));
      MPoly minor = cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(idx), c);
      MPoly term = m(row, c) * minor;
      if (s > 0) acc += term;
      else acc -= term;
    }
    s = -s;
  }
  return acc;
}

// Smaller is a cheaper pivot: constants first, then low degree, then few terms.
std::pair<int, std::size_t> pivot_cost(const MPoly& p) { return {p.degree(), p.terms().size()}; }

}  // namespace

MPoly poly_det_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("poly_det of non-square matrix");
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
  return cofactor_rec(m, cols, 0);
}

MPoly poly_det_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("poly_det of non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t nv = m.nvars();
  if (n == 0) return MPoly::constant(nv, 1);
  std::vector<std::vector<MPoly>> a(n, std::vector<MPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  MPoly prev = MPoly::constant(nv, 1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (!a[i][j].is_zero() && (pr == n || pivot_cost(a[i][j]) < pivot_cost(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == n) return MPoly(nv);
    if (pr != k) {
      std::swap(a[pr], a[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (auto& row : a) std::swap(row[pc], row[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) num -= a[i][k] * a[k][j];
        a[i][j] = prev.is_constant() ? (1 / prev.constant_term()) * num : exact_div(num, prev);
      }
      a[i][k] = MPoly(nv);
    }
    prev = a[k][k];
  }
  return sign > 0 ? prev : -prev;
}

MPoly poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("poly_det of non-square matrix");
  return m.rows() <= 4 ? poly_det_cofactor(m) : poly_det_bareiss(m);
}

PolyMatrix hessian(const MPoly& p) {
  const std::size_t n = p.nvars();
  PolyMatrix h(n, n, n);
  std::vector<MPoly> g = gradient(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = g[i].derivative(j);
      h(j, i) = h(i, j);
    }
  return h;
}

PolyMatrix twisted_hessian(const MPoly& p, const Rational& c) {
  PolyMatrix h = hessian(p);
  std::vector<MPoly> g = gradient(p);
  for (std::size_t i = 0; i < p.nvars(); ++i)
    for (std::size_t j = 0; j < p.nvars(); ++j) h(i, j) += c * (g[i] * g[j]);
  return h;
}

}  // namespace lsa
