#pragma once

#include <map>
#include <string>
#include <vector>

#include "lsa/rational.hpp"

namespace lsa {

using Monomial = std::vector<unsigned>;

// Graded lexicographic order with x1 > x2 > ... > xn.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned total_degree(const Monomial& m);

// Sparse polynomial over Q in x1..x_nvars. No zero coefficients are stored.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t i);  // 0-based index
  static MPoly linear(const QVector& coeffs);               // sum coeffs[i] x_{i+1}
  static MPoly monomial(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int degree() const;  // -1 for the zero polynomial

  void add_term(const Monomial& m, const Rational& c);

  MPoly homogeneous_component(unsigned d) const;
  MPoly derivative(std::size_t i) const;
  Rational evaluate(const QVector& point) const;
  double evaluate(const std::vector<double>& point) const;

  // x_i -> images[i]; all images share one nvars.
  MPoly substitute(const std::vector<MPoly>& images) const;
  // P(x + t v) with t appended as variable x_{nvars+1}.
  MPoly substitute_affine(const QVector& direction) const;
  // Same polynomial viewed in a ring with more variables.
  MPoly extend(std::size_t nvars) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Rational& c, MPoly a);
MPoly pow(const MPoly& a, unsigned k);

// q with f = q g; throws InternalError if the division leaves a remainder.
MPoly exact_div(const MPoly& f, const MPoly& g);

// Terms ascending in graded-lex order, e.g. "1 + 2*x2 - x1^2".
std::string to_string(const MPoly& p);

// Directional derivative sum_i v_i dP/dx_i.
MPoly directional_derivative(const MPoly& p, const QVector& v);
std::vector<MPoly> gradient(const MPoly& p);

}  // namespace lsa
