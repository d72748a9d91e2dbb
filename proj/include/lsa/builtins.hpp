#pragma once

#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/mpoly.hpp"

namespace lsa {

// (x.y)_i = i x_n y_i + sum_{j<i} x_{i-j} y_j
Algebra cayley(std::size_t n);
// e_i . e_j = e_{i+j} when i + j <= m
Algebra fili(std::size_t m);
// Basis e_1..e_{n-1}, u = e_n: x.y = g(x,y)u, x.u = 0, u.x = x/2, u.u = u.
Algebra parab(const QMatrix& g);
Algebra parab_delta(std::size_t n);
Algebra six_dim();
Algebra trivial(std::size_t n);

// x.y = (xhat (D+N) ybar, alpha xbar^T J ybar + xhat yhat) on Q^n + Q.
struct NegeigParams {
  QMatrix J, D, N;
  Rational alpha = 1;
};
// Throws CodedError("IDENTITY_FAILED") naming the identity that fails.
void check_negeig_params(const NegeigParams& p);
Algebra negeig(const NegeigParams& p, const std::string& name = "negeig");
NegeigParams sigma_family(const Rational& sigma);
NegeigParams jordan_family(const Rational& t);
// D singular: J = [[0,1],[1,0]], D = diag(1,0).
NegeigParams negeig_degenerate();

// Phi_n from the sum over partitions of n.
MPoly eastwood_ezhov_partition_sum(std::size_t n);
// Phi_n = -x_n + sum_{i<n} (i/n - 1) x_i Phi_{n-i}, Phi_1 = -x1.
MPoly eastwood_ezhov_recursion(std::size_t n);
// Both constructions, checked against each other and against (1 - P_n)/n.
MPoly eastwood_ezhov(std::size_t n);

// Regression corpus: cayley 1..6, fili 1..5, parab_delta 2..5, six_dim, negeig presets, trivial 1..4.
std::vector<Algebra> builtin_corpus();

}  // namespace lsa
