#pragma once

#include <vector>

#include "lsa/algebra.hpp"

namespace lsa {

inline constexpr double kDefaultFlowTolerance = 1e-9;

struct FlowSample {
  std::vector<double> a, x0;
  double t = 0;
  std::vector<double> endpoint;  // exp(t [[L(a), a], [0, 0]]) (x0, 1)
  double character_residual = 0; // |P(endpoint) - e^{t tr R(a)} P(x0)|
  bool within_tolerance = false;
};

// Floating point throughout; p must be the characteristic polynomial of a.
FlowSample flow_sample(const Algebra& a, const MPoly& p, const std::vector<double>& dir,
                       const std::vector<double>& x0, double t, double tol = kDefaultFlowTolerance);
FlowSample flow_sample(const Algebra& a, const std::vector<double>& dir, const std::vector<double>& x0, double t,
                       double tol = kDefaultFlowTolerance);

// Scaling and squaring with a truncated Taylor series.
std::vector<std::vector<double>> matrix_exp(const std::vector<std::vector<double>>& m);

}  // namespace lsa
