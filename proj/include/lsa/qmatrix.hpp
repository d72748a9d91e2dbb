#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsa/rational.hpp"

namespace lsa {

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);
  static QMatrix diagonal(const QVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return data_; }

  QVector row(std::size_t i) const;
  QVector col(std::size_t j) const;

  QMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  QMatrix pow(unsigned k) const;

  bool operator==(const QMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& c, const QMatrix& a);
QVector operator*(const QMatrix& a, const QVector& v);

std::string to_string(const QMatrix& m);

// Fraction-free Bareiss elimination with full pivoting on the integer matrix obtained by
// clearing row denominators.
Rational det(const QMatrix& m);
std::size_t rank(const QMatrix& m);

struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(const QMatrix& m);

// Basis of {v : m v = 0}, returned in reduced row-echelon form (as vectors).
std::vector<QVector> kernel_basis(const QMatrix& m);

// Some solution of m x = b, or nullopt if inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
std::optional<QMatrix> inverse(const QMatrix& m);

bool is_nilpotent(const QMatrix& m);
bool is_symmetric(const QMatrix& m);
bool is_lower_triangular(const QMatrix& m);

// Change of basis: columns of b are the new basis vectors; returns b^{-1} m b.
QMatrix conjugate(const QMatrix& m, const QMatrix& b);

}  // namespace lsa
