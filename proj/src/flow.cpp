#include "lsa/flow.hpp"

#include <cmath>

#include "lsa/errors.hpp"

namespace lsa {

namespace {

using DMatrix = std::vector<std::vector<double>>;

DMatrix mul(const DMatrix& a, const DMatrix& b) {
  const std::size_t n = a.size();
  DMatrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0.0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

DMatrix matrix_exp(const DMatrix& m) {
  const std::size_t n = m.size();
  double norm = 0;
  for (const auto& row : m) {
    double s = 0;
    for (double x : row) s += std::abs(x);
    norm = std::max(norm, s);
  }
  int squarings = 0;
  while (norm > 0.25) {
    norm /= 2;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  DMatrix a = m;
  for (auto& row : a)
    for (double& x : row) x *= scale;
  DMatrix result(n, std::vector<double>(n, 0.0)), term(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1.0;
  for (int k = 1; k <= 20; ++k) {
    term = mul(term, a);
    for (auto& row : term)
      for (double& x : row) x /= k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) result = mul(result, result);
  return result;
}

FlowSample flow_sample(const Algebra& a, const MPoly& p, const std::vector<double>& dir,
                       const std::vector<double>& x0, double t, double tol) {
  require_validated(a);
  const std::size_t n = a.dim();
  if (dir.size() != n || x0.size() != n || p.nvars() != n) throw DimensionError("flow_sample: size mismatch");
  DMatrix aug(n + 1, std::vector<double>(n + 1, 0.0));
  double tr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double c = a.c(i, j, k).get_d();
        aug[k][j] += t * dir[i] * c;  // L(a) e_j = sum_i a_i e_i . e_j
        if (j == k) tr += dir[j] * a.c(i, j, i).get_d();
      }
    aug[i][n] = t * dir[i];
  }
  const DMatrix e = matrix_exp(aug);
  FlowSample s{dir, x0, t, std::vector<double>(n, 0.0), 0, false};
  for (std::size_t i = 0; i < n; ++i) {
    double v = e[i][n];
    for (std::size_t j = 0; j < n; ++j) v += e[i][j] * x0[j];
    s.endpoint[i] = v;
  }
  s.character_residual = std::abs(p.evaluate(s.endpoint) - std::exp(t * tr) * p.evaluate(x0));
  s.within_tolerance = s.character_residual <= tol;
  return s;
}

FlowSample flow_sample(const Algebra& a, const std::vector<double>& dir, const std::vector<double>& x0, double t,
                       double tol) {
  return flow_sample(a, char_poly_lsa(a, a.dim()), dir, x0, t, tol);
}

}  // namespace lsa
