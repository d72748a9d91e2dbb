#include "lsa/eigen.hpp"

#include "lsa/errors.hpp"

namespace lsa {

UPoly char_poly(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  QMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * QMatrix::identity(n);
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return UPoly(std::move(c));
}

EigenData rational_eigendata(const QMatrix& m) {
  EigenData e;
  e.char_poly = char_poly(m);
  e.rational_roots = rational_roots(e.char_poly);
  const std::size_t n = m.rows();
  unsigned total = 0;
  for (const auto& [root, mult] : e.rational_roots) {
    total += mult;
    QMatrix shifted = m - root * QMatrix::identity(n);
    e.gen_eigenspaces[root] = kernel_basis(shifted.pow(static_cast<unsigned>(n)));
    require(e.gen_eigenspaces[root].size() == mult, "generalized eigenspace dimension != multiplicity");
  }
  e.splits_over_Q = total == n;
  e.nilpotent = e.rational_roots.size() == 1 && e.rational_roots[0].first == 0 && total == n;
  if (n == 0) e.splits_over_Q = e.nilpotent = true;
  return e;
}

}  // namespace lsa
