#pragma once

#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/subspace.hpp"

namespace lsa {

struct KoszulData {
  QVector lambda;
  QMatrix h;  // h_ij = lambda(e_i . e_j)
  QVector u;  // h(u, .) = lambda; u . u = u
  bool normalized = false;  // lambda(u) in {0, 1}
  Rational rank;            // tr R(u), an integer in [1, dim]
};

// Throws CodedError NOT_SYMMETRIC or DEGENERATE_METRIC.
KoszulData koszul_data(const Algebra& a, const QVector& lambda);
// lambda = tr R; u is the right principal idempotent.
KoszulData principal_idempotent(const Algebra& a);
// Rescales lambda and h by 1/lambda(u) when lambda(u) != 0.
KoszulData normalize(const Algebra& a, const KoszulData& k);

// h-adjoint: h(M x, y) = h(x, M* y).
QMatrix adjoint(const QMatrix& m, const QMatrix& h);

struct IdempotentReport {
  bool L_preserves_ker_lambda = false;
  bool R_preserves_ker_lambda = false;
  bool adjoint_identity = false;  // L(u) + L(u)* = R(u) + I
  bool R_self_adjoint = false;
  unsigned rank = 0;
  bool N_nilpotent = false;  // N = R(u) - R(u)^2
  unsigned N_index = 0;      // least q with N^q = 0
  unsigned N_bound = 0;      // max(rank, n - rank)
  std::size_t fitting_zero_dim = 0;
  std::size_t fitting_one_dim = 0;
  bool fitting_zero_in_ker_lambda = false;
  bool ker_R_subalgebra_with_derivation = false;  // L(u) derives the bracket on ker R(u)
  bool R_idempotent = false;
  bool u_left_ideal = false;
  bool ker_R_eq_ker_lambda = false;  // graph-extension recognizer
  bool L_invertible = false;         // sufficient for simplicity
};

IdempotentReport idempotent_report(const Algebra& a, const KoszulData& k);

struct InducedAlgebra {
  Algebra base;                // (ker lambda, o) in the basis below
  QMatrix metric;              // normalized h restricted to ker lambda
  QMatrix derivation;          // L(u) restricted to ker lambda
  std::vector<QVector> basis;  // reduced echelon basis of ker lambda inside A
  KoszulData koszul;           // normalized
};

// Requires ker lambda = ker R(u) and lambda(u) != 0, else CodedError RECOGNIZER_FAILED.
InducedAlgebra induced_algebra(const Algebra& a, const KoszulData& k);

}  // namespace lsa
