#pragma once

#include <string>
#include <vector>

#include "lsa/algebra.hpp"

namespace lsa {

enum class TriangularFailure { None, NotSolvable, IrrationalEigenvalues };

std::string to_string(TriangularFailure f);

struct Triangularization {
  bool ok = false;
  // flag[k] spans the (k+1)-th step of an invariant flag modulo the earlier steps
  std::vector<QVector> flag;
  // columns: the flag in reverse order; every L(e_i) is lower triangular in this basis
  QMatrix basis;
  TriangularFailure reason = TriangularFailure::None;
  std::string detail;
};

Triangularization triangularize(const Algebra& a);

}  // namespace lsa
