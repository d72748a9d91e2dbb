#pragma once

#include <vector>

#include "lsa/mpoly.hpp"
#include "lsa/qmatrix.hpp"

namespace lsa {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  static PolyMatrix identity(std::size_t n, std::size_t nvars);
  static PolyMatrix constant(const QMatrix& m, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  MPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix evaluate(const QVector& point) const;
  std::vector<std::vector<double>> evaluate(const std::vector<double>& point) const;
  bool is_zero() const;
  MPoly trace() const;
  PolyMatrix transpose() const;
  PolyMatrix pow(unsigned k) const;

  bool operator==(const PolyMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<MPoly> data_;
};

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Rational& c, const PolyMatrix& a);
std::vector<MPoly> operator*(const PolyMatrix& a, const std::vector<MPoly>& v);

// Cofactor expansion up to dimension 4, Bareiss above.
MPoly poly_det(const PolyMatrix& m);
MPoly poly_det_bareiss(const PolyMatrix& m);
MPoly poly_det_cofactor(const PolyMatrix& m);

PolyMatrix hessian(const MPoly& p);
// Hess P + c dP (x) dP
PolyMatrix twisted_hessian(const MPoly& p, const Rational& c = 1);

}  // namespace lsa
