#include "lsa/triangularize.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "lsa/eigen.hpp"
#include "lsa/errors.hpp"
#include "lsa/series.hpp"
#include "lsa/subspace.hpp"

namespace lsa {

std::string to_string(TriangularFailure f) {
  switch (f) {
    case TriangularFailure::None: return "NONE";
    case TriangularFailure::NotSolvable: return "NOT_SOLVABLE";
    case TriangularFailure::IrrationalEigenvalues: return "IRRATIONAL_EIGENVALUES";
  }
  return "?";
}

namespace {

struct QuotientOp {
  QMatrix m;
  EigenData eig;
};

class CommonEigenSearch {
 public:
  explicit CommonEigenSearch(std::vector<QuotientOp> ops) : ops_(std::move(ops)) {
    std::stable_sort(ops_.begin(), ops_.end(), [](const QuotientOp& a, const QuotientOp& b) {
      return a.eig.distinct_rational_roots() < b.eig.distinct_rational_roots();
    });
  }

  std::optional<QVector> run(std::size_t m) { return dfs(0, Subspace::whole(m)); }

 private:
  std::optional<QVector> dfs(std::size_t idx, const Subspace& s) {
    if (idx == ops_.size()) return s.basis().front();
    const std::string key = std::to_string(idx) + "|" + to_string(s);
    if (failed_.count(key)) return std::nullopt;
    const std::size_t m = s.ambient();
    for (const auto& [alpha, mult] : ops_[idx].eig.rational_roots) {
      Subspace next = intersect(s, kernel(ops_[idx].m - alpha * QMatrix::identity(m)));
      if (next.is_zero()) continue;
      if (auto v = dfs(idx + 1, next)) return v;
    }
    failed_.insert(key);
    return std::nullopt;
  }

  std::vector<QuotientOp> ops_;
  std::set<std::string> failed_;
};

}  // namespace

Triangularization triangularize(const Algebra& a) {
  require_validated(a);
  const std::size_t n = a.dim();
  Triangularization t;
  SeriesReport s = series(a);
  if (!s.lie_solvable) {
    t.reason = TriangularFailure::NotSolvable;
    t.detail = "derived series stabilizes at " + to_string(s.lie_derived.back());
    return t;
  }
  std::vector<QMatrix> ops;
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix l = a.left(unit_vector(n, i));
    if (!l.is_zero()) ops.push_back(l);
  }
  Subspace w = Subspace::zero(n);
  while (t.flag.size() < n) {
    std::vector<QVector> cols = w.basis();
    std::vector<QVector> comp = w.complement();
    cols.insert(cols.end(), comp.begin(), comp.end());
    QMatrix b = QMatrix::from_columns(cols, n);
    QMatrix binv = *inverse(b);
    const std::size_t k = w.dim(), m = n - k;
    std::vector<QuotientOp> qops;
    for (std::size_t oi = 0; oi < ops.size(); ++oi) {
      QMatrix full = binv * ops[oi] * b;
      QMatrix q(m, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) q(r, c) = full(k + r, k + c);
      EigenData e = rational_eigendata(q);
      if (e.rational_roots.empty()) {
        t.reason = TriangularFailure::IrrationalEigenvalues;
        t.detail = "operator with characteristic polynomial " + to_string(e.char_poly) +
                   " on a quotient of dimension " + std::to_string(m) + " has no rational eigenvalue";
        t.flag.clear();
        return t;
      }
      qops.push_back({q, e});
    }
    std::optional<QVector> y = qops.empty() ? std::optional<QVector>(unit_vector(m, 0))
                                            : CommonEigenSearch(std::move(qops)).run(m);
    if (!y) {
      t.reason = TriangularFailure::IrrationalEigenvalues;
      t.detail = "no common eigenvector on a quotient of dimension " + std::to_string(m);
      t.flag.clear();
      return t;
    }
    QVector v(n, 0);
    for (std::size_t c = 0; c < m; ++c) v = add(v, scale((*y)[c], comp[c]));
    t.flag.push_back(v);
    w = w + Subspace(n, {v});
  }
  std::vector<QVector> rev(t.flag.rbegin(), t.flag.rend());
  t.basis = QMatrix::from_columns(rev, n);
  for (const auto& op : ops) require(is_lower_triangular(conjugate(op, t.basis)), "triangularize: flag not invariant");
  t.ok = true;
  return t;
}

}  // namespace lsa
