#pragma once

#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/subspace.hpp"

namespace lsa {

// Each list starts at the first term and stops before the first repeated term.
struct SeriesReport {
  std::vector<Subspace> lie_derived;        // A, [A,A], ...
  std::vector<Subspace> lie_lower_central;  // A, [A,A], [A,[A,A]], ...
  std::vector<Subspace> rnil;               // A, A.A, (A.A).A, ...
  std::vector<Subspace> triv;               // ker L cap ker R, ...
  bool lie_solvable = false;
  bool lie_nilpotent = false;
  bool right_nilpotent = false;
  bool nilpotent = false;
};

Subspace product_span(const Algebra& a, const Subspace& u, const Subspace& v);
Subspace bracket_span(const Algebra& a, const Subspace& u, const Subspace& v);
// {z : z.A and A.z lie in t}
Subspace triv_step(const Algebra& a, const Subspace& t);

SeriesReport series(const Algebra& a);

}  // namespace lsa
