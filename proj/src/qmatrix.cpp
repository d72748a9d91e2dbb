#include "lsa/qmatrix.hpp"

#include <utility>

#include "lsa/errors.hpp"

namespace lsa {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DimensionError("QMatrix: entry count != rows*cols");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

QMatrix QMatrix::diagonal(const QVector& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

QVector QMatrix::col(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational QMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::pow(unsigned k) const {
  if (!is_square()) throw DimensionError("pow of non-square matrix");
  QMatrix r = identity(rows_), b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix +: shape mismatch");
  QMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix -: shape mismatch");
  QMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix *: shape mismatch");
  QMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

QMatrix operator*(const Rational& c, const QMatrix& a) {
  QMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= c;
  return r;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector: shape mismatch");
  QVector r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::string to_string(const QMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += to_string(m.row(i));
  }
  return s + "]";
}

namespace {

struct BareissResult {
  std::size_t rank = 0;
  mpz_class last_pivot = 1;  // determinant of the leading rank x rank minor of the permuted matrix
  int sign = 1;
};

// Integer matrix with each row scaled by the lcm of its denominators; returns the product of scales.
std::vector<std::vector<mpz_class>> clear_denominators(const QMatrix& m, mpz_class& scale_product) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  scale_product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale_product *= l;
  }
  return a;
}

BareissResult bareiss(std::vector<std::vector<mpz_class>> a) {
  BareissResult res;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  mpz_class prev = 1;
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    // full pivoting: smallest nonzero magnitude in the trailing block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    if (pr != k) {
      std::swap(a[pr], a[k]);
      res.sign = -res.sign;
    }
    if (pc != k) {
      for (auto& r : a) std::swap(r[pc], r[k]);
      res.sign = -res.sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        require(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()) != 0, "Bareiss: inexact division");
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  res.rank = k;
  res.last_pivot = prev;
  return res;
}

}  // namespace

Rational det(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("det of non-square matrix");
  if (m.rows() == 0) return 1;
  mpz_class scale;
  auto a = clear_denominators(m, scale);
  auto r = bareiss(std::move(a));
  if (r.rank < m.rows()) return 0;
  Rational d(r.last_pivot * r.sign, scale);
  d.canonicalize();
  return d;
}

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  mpz_class scale;
  return bareiss(clear_denominators(m, scale)).rank;
}

Echelon rref(const QMatrix& m) {
  Echelon e{m, {}};
  QMatrix& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  Echelon k = rref(QMatrix::from_rows(raw, n));
  std::vector<QVector> out;
  for (std::size_t r = 0; r < k.pivots.size(); ++r) out.push_back(k.reduced.row(r));
  return out;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  QVector x(m.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

bool is_nilpotent(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("is_nilpotent: non-square");
  return m.pow(static_cast<unsigned>(m.rows())).is_zero();
}

bool is_symmetric(const QMatrix& m) { return m.is_square() && m == m.transpose(); }

bool is_lower_triangular(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

QMatrix conjugate(const QMatrix& m, const QMatrix& b) {
  auto inv = inverse(b);
  if (!inv) throw PreconditionError("conjugate: basis matrix is singular");
  return *inv * m * b;
}

}  // namespace lsa
