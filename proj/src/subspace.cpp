#include "lsa/subspace.hpp"

#include "lsa/errors.hpp"

namespace lsa {

Subspace::Subspace(std::size_t ambient, const std::vector<QVector>& spanning) : ambient_(ambient) {
  if (spanning.empty()) return;
  Echelon e = rref(QMatrix::from_rows(spanning, ambient));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis_.push_back(e.reduced.row(r));
  pivots_ = e.pivots;
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<QVector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(n, i));
  return Subspace(n, b);
}

Subspace Subspace::zero(std::size_t n) { return Subspace(n, {}); }

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw DimensionError("Subspace::contains: length mismatch");
  // reduce v against the echelon basis
  QVector w = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational c = w[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_[r][j];
  }
  return lsa::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

std::vector<QVector> Subspace::annihilator() const {
  if (basis_.empty()) return Subspace::whole(ambient_).basis();
  return kernel_basis(QMatrix::from_rows(basis_, ambient_));
}

std::vector<QVector> Subspace::complement() const {
  std::vector<bool> piv(ambient_, false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<QVector> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!piv[i]) out.push_back(unit_vector(ambient_, i));
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace sum: ambient mismatch");
  std::vector<QVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace intersection: ambient mismatch");
  std::vector<QVector> cons = a.annihilator();
  auto bn = b.annihilator();
  cons.insert(cons.end(), bn.begin(), bn.end());
  if (cons.empty()) return Subspace::whole(a.ambient());
  return Subspace(a.ambient(), kernel_basis(QMatrix::from_rows(cons, a.ambient())));
}

Subspace image(const QMatrix& m, const Subspace& s) {
  std::vector<QVector> imgs;
  for (const auto& v : s.basis()) imgs.push_back(m * v);
  return Subspace(m.rows(), imgs);
}

Subspace kernel(const QMatrix& m) { return Subspace(m.cols(), kernel_basis(m)); }

Subspace column_space(const QMatrix& m) {
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace(m.rows(), cols);
}

std::string to_string(const Subspace& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.basis().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.basis()[i]);
  }
  return out + ">";
}

}  // namespace lsa
