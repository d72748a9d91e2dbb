#include "lsa/series.hpp"

#include <functional>

#include "lsa/errors.hpp"

namespace lsa {

Subspace product_span(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<QVector> out;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) out.push_back(a.product(x, y));
  return Subspace(a.dim(), out);
}

Subspace bracket_span(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<QVector> out;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) out.push_back(a.bracket(x, y));
  return Subspace(a.dim(), out);
}

Subspace triv_step(const Algebra& a, const Subspace& t) {
  const std::size_t n = a.dim();
  std::vector<QVector> ann = t.annihilator();
  if (ann.empty()) return Subspace::whole(n);
  std::vector<QVector> cons;
  for (std::size_t j = 0; j < n; ++j) {
    const QVector ej = unit_vector(n, j);
    for (const QMatrix& op : {a.right(ej), a.left(ej)}) {
      for (const auto& q : ann) {
        QVector row(n, 0);
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t r = 0; r < n; ++r) row[c] += q[r] * op(r, c);
        cons.push_back(row);
      }
    }
  }
  return kernel(QMatrix::from_rows(cons, n));
}

namespace {

std::vector<Subspace> iterate(Subspace first, const std::function<Subspace(const Subspace&)>& next) {
  std::vector<Subspace> out{first};
  for (;;) {
    Subspace s = next(out.back());
    if (s == out.back()) return out;
    out.push_back(std::move(s));
  }
}

}  // namespace

SeriesReport series(const Algebra& a) {
  require_validated(a);
  const std::size_t n = a.dim();
  const Subspace all = Subspace::whole(n);
  SeriesReport s;
  s.lie_derived = iterate(all, [&](const Subspace& d) { return bracket_span(a, d, d); });
  s.lie_lower_central = iterate(all, [&](const Subspace& c) { return bracket_span(a, all, c); });
  s.rnil = iterate(all, [&](const Subspace& r) { return product_span(a, r, all); });
  s.triv = iterate(triv_step(a, Subspace::zero(n)), [&](const Subspace& t) { return triv_step(a, t); });
  s.lie_solvable = s.lie_derived.back().is_zero();
  s.lie_nilpotent = s.lie_lower_central.back().is_zero();
  s.right_nilpotent = s.rnil.back().is_zero();
  s.nilpotent = s.triv.back().is_whole();
  return s;
}

}  // namespace lsa
