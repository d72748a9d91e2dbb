#include "lsa/weights.hpp"

#include <functional>

#include "lsa/eigen.hpp"
#include "lsa/errors.hpp"
#include "lsa/subspace.hpp"

namespace lsa {

WeightDecomposition weight_decomposition(const QMatrix& d, const QMatrix* h, const Algebra* base) {
  if (!d.is_square()) throw DimensionError("weight_decomposition: D not square");
  const std::size_t n = d.rows();
  EigenData e = rational_eigendata(d);
  WeightDecomposition w;
  w.splits = e.splits_over_Q;
  w.spaces = e.gen_eigenspaces;
  for (const auto& [alpha, mult] : e.rational_roots) w.weights.emplace_back(alpha, mult);

  w.symmetric = true;
  for (const auto& [alpha, dim] : w.weights) {
    auto it = w.spaces.find(1 - alpha);
    if (it == w.spaces.end() || it->second.size() != dim) w.symmetric = false;
  }

  if (h) {
    bool ok = true;
    for (const auto& [a, sa] : w.spaces)
      for (const auto& [b, sb] : w.spaces) {
        QMatrix block(sa.size(), sb.size());
        for (std::size_t i = 0; i < sa.size(); ++i)
          for (std::size_t j = 0; j < sb.size(); ++j) block(i, j) = dot(sa[i], *h * sb[j]);
        if (a + b == 1) ok = ok && block.is_square() && det(block) != 0;
        else ok = ok && block.is_zero();
      }
    w.pairing_ok = ok;
  }
  if (base) {
    if (base->dim() != n) throw DimensionError("weight_decomposition: base dimension != size of D");
    bool ok = true;
    for (const auto& [a, sa] : w.spaces)
      for (const auto& [b, sb] : w.spaces) {
        auto it = w.spaces.find(a + b);
        const Subspace target = it == w.spaces.end() ? Subspace::zero(n) : Subspace(n, it->second);
        for (const auto& x : sa)
          for (const auto& y : sb) ok = ok && target.contains(base->product(x, y));
      }
    w.grading_ok = ok;
  }
  return w;
}

std::vector<ArithmeticRelation> arithmetic_relations(const std::vector<Rational>& weights, const MPoly& p) {
  std::vector<ArithmeticRelation> out;
  const std::size_t r = weights.size();
  for (int deg = 2; deg <= p.degree(); ++deg) {
    if (p.homogeneous_component(static_cast<unsigned>(deg)).is_zero()) continue;
    std::vector<unsigned> cur(r, 0);
    std::optional<std::vector<unsigned>> found;
    // enumerate compositions of deg into r nonnegative parts, first part largest first
    std::function<void(std::size_t, unsigned, Rational)> rec = [&](std::size_t k, unsigned left, Rational acc) {
      if (found) return;
      if (k + 1 == r) {
        cur[k] = left;
        if (acc + left * weights[k] == 1) found = cur;
        return;
      }
      for (unsigned c = left + 1; c-- > 0;) {
        cur[k] = c;
        rec(k + 1, left - c, acc + c * weights[k]);
        if (found) return;
      }
    };
    if (r > 0) rec(0, static_cast<unsigned>(deg), 0);
    if (!found) throw InternalError("no arithmetic relation among the weights in degree " + std::to_string(deg));
    out.push_back({static_cast<unsigned>(deg), *found});
  }
  return out;
}

}  // namespace lsa
