#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/series.hpp"
#include "lsa/triangularize.hpp"

namespace lsa {

// A decided property. True flags carry evidence, false flags a counterexample:
// `indices` are 0-based basis indices, `vector` an algebra element or covector.
struct Predicate {
  bool holds = false;
  std::string witness;
  std::vector<std::size_t> indices;
  QVector vector;
};

struct ClassifyOptions {
  bool thorough = false;  // also decide completeness by R(X)^dim == 0
  std::size_t max_dim = kDefaultMaxDim;
};

struct ClassificationReport {
  Predicate is_lsa;
  Predicate complete;
  Predicate right_nil;
  Predicate left_nil;
  Predicate right_nilpotent;
  Predicate nilpotent;
  Predicate lie_solvable;
  Predicate lie_nilpotent;
  Predicate perfect;
  Predicate trace_form_nondegenerate;
  Predicate derived_abelian;
  Predicate ker_trR_unimodular;
  Predicate triangularizable;
  Predicate condition_2trL_eq_n1trR;
  std::size_t derived_codim = 0;
  Signature trace_signature;
  SeriesReport series;
  Triangularization triangular;
  std::optional<bool> complete_by_power;  // set when thorough
};

ClassificationReport classify(const Algebra& a, const ClassifyOptions& opts = {});

// First point of {0..bound}^n (odometer order) where p does not vanish.
std::optional<QVector> nonvanishing_point(const MPoly& p, unsigned bound);

}  // namespace lsa
