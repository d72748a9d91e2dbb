#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsa/rational.hpp"

namespace lsa {

// Univariate polynomial over Q; coeffs[i] is the coefficient of t^i, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational eval(const Rational& t) const;

  // Quotient by (t - root); requires root to be a root.
  UPoly deflate(const Rational& root) const;

  bool operator==(const UPoly& o) const = default;

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const UPoly& p, const std::string& var = "t");

// Rational roots with multiplicity, ascending by root.
std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p);

}  // namespace lsa
