#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsa/poly_matrix.hpp"
#include "lsa/qmatrix.hpp"

namespace lsa {

inline constexpr std::size_t kDefaultMaxDim = 10;

struct Validation;

// n-dimensional algebra with e_i . e_j = sum_k c(i,j,k) e_k (indices 0-based here,
// 1-based in files and reports).
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, std::size_t dim);
  Algebra(std::string name, std::size_t dim, std::vector<Rational> constants);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return dim_; }
  bool validated() const { return validated_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  // Clears the validated flag.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& v);
  const std::vector<Rational>& constants() const { return c_; }

  QVector basis_product(std::size_t i, std::size_t j) const;
  QVector product(const QVector& x, const QVector& y) const;
  QVector bracket(const QVector& x, const QVector& y) const;
  QMatrix left(const QVector& a) const;   // L(a) y = a . y
  QMatrix right(const QVector& a) const;  // R(a) y = y . a

  // Equal name, dimension and structure constants.
  bool operator==(const Algebra& o) const { return name_ == o.name_ && dim_ == o.dim_ && c_ == o.c_; }
  bool same_structure(const Algebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  friend Validation validate_lsa(const Algebra& a);
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
  bool validated_ = false;
};

struct Violation {
  std::size_t i, j, k;  // 0-based
  QVector residual;     // left-symmetry defect at (e_i, e_j, e_k)
};

struct Validation {
  bool ok = false;
  Algebra algebra;  // copy with validated() == true when ok
  std::optional<Violation> violation;
};

// Checks (e_i e_j) e_k - e_i (e_j e_k) = (e_j e_i) e_k - e_j (e_i e_k) on all basis triples.
Validation validate_lsa(const Algebra& a);
// validate_lsa, throwing CodedError("VIOLATION") on failure.
Algebra validated(const Algebra& a);
void require_validated(const Algebra& a);
void require_dim_cap(const Algebra& a, std::size_t max_dim);

std::string to_string(const Violation& v);

enum class OperatorKind { L, R };

struct OperatorField {
  OperatorKind kind;
  PolyMatrix entries;  // degree <= 1 in x1..xn
  QMatrix at(const QVector& a) const { return entries.evaluate(a); }
};

OperatorField left_field(const Algebra& a);
OperatorField right_field(const Algebra& a);
QVector trace_left_covector(const Algebra& a);
QVector trace_right_covector(const Algebra& a);
MPoly trace_left(const Algebra& a);
MPoly trace_right(const Algebra& a);

struct TraceForm {
  QMatrix tau;
  bool nondegenerate = false;
};
// tau_ij = tr R(e_i)R(e_j), cross-checked against tr R(e_i . e_j).
TraceForm trace_form(const Algebra& a);

// (positive, negative, zero) counts of a symmetric form.
struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
};
Signature signature(const QMatrix& symmetric);

// P(x) = det(I + R(x)).
MPoly char_poly_lsa(const Algebra& a, std::size_t max_dim = kDefaultMaxDim);

// Structure constants in the basis given by the columns of b.
Algebra transport(const Algebra& a, const QMatrix& b);

}  // namespace lsa
