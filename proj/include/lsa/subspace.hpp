#pragma once

#include <string>
#include <vector>

#include "lsa/qmatrix.hpp"

namespace lsa {

// Subspace of Q^n held as its reduced row-echelon basis, so equality is basis equality.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<QVector>& spanning);

  static Subspace whole(std::size_t n);
  static Subspace zero(std::size_t n);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == ambient_; }
  const std::vector<QVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;

  // Covectors (as rows) whose common kernel is this subspace.
  std::vector<QVector> annihilator() const;
  // Standard basis vectors at non-pivot positions; spans a complement.
  std::vector<QVector> complement() const;

  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace image(const QMatrix& m, const Subspace& s);
Subspace kernel(const QMatrix& m);
Subspace column_space(const QMatrix& m);

std::string to_string(const Subspace& s);

}  // namespace lsa
