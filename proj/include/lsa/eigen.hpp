#pragma once

#include <map>
#include <vector>

#include "lsa/qmatrix.hpp"
#include "lsa/upoly.hpp"

namespace lsa {

struct EigenData {
  UPoly char_poly;  // det(t I - M), monic
  std::vector<std::pair<Rational, unsigned>> rational_roots;
  bool splits_over_Q = false;
  // root -> basis of ker (M - root I)^dim
  std::map<Rational, std::vector<QVector>> gen_eigenspaces;
  bool nilpotent = false;

  std::size_t distinct_rational_roots() const { return rational_roots.size(); }
};

// Faddeev-LeVerrier; exact over Q.
UPoly char_poly(const QMatrix& m);
EigenData rational_eigendata(const QMatrix& m);

}  // namespace lsa
