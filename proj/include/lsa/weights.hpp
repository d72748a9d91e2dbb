#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/mpoly.hpp"

namespace lsa {

struct WeightDecomposition {
  std::vector<std::pair<Rational, std::size_t>> weights;  // ascending, with dimensions
  std::map<Rational, std::vector<QVector>> spaces;
  bool splits = false;              // false: NON_SPLITTING, spaces cover only rational weights
  bool symmetric = false;           // alpha <-> 1 - alpha with equal dimensions
  std::optional<bool> pairing_ok;   // h(B^a, B^b) = 0 unless a + b = 1, nondegenerate then
  std::optional<bool> grading_ok;   // B^a o B^b in B^{a+b}
};

WeightDecomposition weight_decomposition(const QMatrix& d, const QMatrix* h = nullptr, const Algebra* base = nullptr);

struct ArithmeticRelation {
  unsigned degree;
  std::vector<unsigned> exponents;  // i_k, aligned with the weight list
};

// For each degree d >= 2 with a nonzero homogeneous part of p: nonnegative i_k with
// sum i_k = d and sum i_k alpha_k = 1. Throws InternalError when some degree has none.
std::vector<ArithmeticRelation> arithmetic_relations(const std::vector<Rational>& weights, const MPoly& p);

}  // namespace lsa
