#include <doctest.h>

#include "lsa/builtins.hpp"
#include "lsa/classify.hpp"
#include "lsa/errors.hpp"
#include "lsa/poly_parse.hpp"
#include "lsa/subspace.hpp"
#include "oracles.hpp"

using namespace lsa;

namespace {

// P_n - 1 = sum_{i<n} x_i (1 - P_{n-i}(x_1..x_{n-i})) + n x_n, P_1 = 1 + x1
MPoly cayley_recursion(std::size_t n) {
  if (n == 1) return parse_poly("1 + x1", 1);
  MPoly p = MPoly::constant(n, 1) + Rational(static_cast<long>(n)) * MPoly::variable(n, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    p += MPoly::variable(n, i - 1) * (MPoly::constant(n, 1) - cayley_recursion(n - i).extend(n));
  return p;
}

Subspace span_of_brackets(const Algebra& a, const Subspace& s, const Subspace& t) {
  std::vector<QVector> out;
  for (const auto& x : s.basis())
    for (const auto& y : t.basis()) out.push_back(a.bracket(x, y));
  return Subspace(a.dim(), out);
}

std::string code_of(const NegeigParams& p) {
  try {
    check_negeig_params(p);
  } catch (const CodedError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("cayley characteristic polynomials follow the recursion") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(char_poly_lsa(cayley(n)) == cayley_recursion(n));
  }
  CHECK(to_string(char_poly_lsa(cayley(2))) == "1 + 2*x2 - x1^2");
}

TEST_CASE("Eastwood-Ezhov polynomials") {
  CHECK(eastwood_ezhov(1) == parse_poly("-x1", 1));
  CHECK(eastwood_ezhov(2) == parse_poly("-x2 + 1/2*x1^2", 2));
  CHECK(eastwood_ezhov(3) == parse_poly("-x3 + x1*x2 - 1/3*x1^3", 3));
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(eastwood_ezhov_partition_sum(n) == eastwood_ezhov_recursion(n));
    if (n <= 6) CHECK(char_poly_lsa(cayley(n)) - MPoly::constant(n, 1) == Rational(-static_cast<long>(n)) * eastwood_ezhov(n));
  }
  CHECK_THROWS_AS(eastwood_ezhov(0), PreconditionError);
}

TEST_CASE("six_dim multiplication operators") {
  const Algebra a = six_dim();
  oracle::Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const QVector x = rng.vector(6);
    const Rational x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5];
    const Rational q = make_rational(1, 4), h = make_rational(1, 2), t = make_rational(3, 4);
    const QMatrix l(6, 6,
                    {q * x6, 0, 0, 0, 0, 0,                              //
                     0, q * x6, 0, 0, 0, 0,                              //
                     0, 0, h * x6, 0, 0, 0,                              //
                     0, 0, x2, t * x6, 0, 0,                             //
                     x3, x3, x1 + 2 * x2, 0, t * x6, 0,                  //
                     6 * x4, 6 * x5, 6 * x3, 6 * x1, 6 * x2, x6});
    const QMatrix r(6, 6,
                    {0, 0, 0, 0, 0, q * x1,                              //
                     0, 0, 0, 0, 0, q * x2,                              //
                     0, 0, 0, 0, 0, h * x3,                              //
                     0, x3, 0, 0, 0, t * x4,                             //
                     x3, 2 * x3, x1 + x2, 0, 0, t * x5,                  //
                     6 * x4, 6 * x5, 6 * x3, 6 * x1, 6 * x2, x6});
    CHECK(a.left(x) == l);
    CHECK(a.right(x) == r);
  }
}

TEST_CASE("six_dim invariants") {
  const Algebra a = six_dim();
  QMatrix tau(6, 6);
  tau(0, 3) = tau(3, 0) = tau(1, 4) = tau(4, 1) = tau(2, 2) = 6;
  tau(5, 5) = 1;
  CHECK(trace_form(a).tau == tau);
  CHECK(char_poly_lsa(a) == parse_poly("6*x1*x2*x3 + 6*x2^2*x3 - 6*x1*x4 - 6*x2*x5 - 3*x3^2 + x6 + 1", 6));
  const Subspace whole = Subspace::whole(6);
  const Subspace d1 = span_of_brackets(a, whole, whole);
  const Subspace d2 = span_of_brackets(a, d1, d1);
  CHECK(d1.dim() == 5);
  CHECK(d1 == Subspace(6, kernel_basis(QMatrix::from_rows({trace_right_covector(a)}, 6))));
  // on x6 = y6 = 0 the displayed operators give [x, y] = (x2 y3 - x3 y2)(e4 + e5)
  CHECK(d2 == Subspace(6, {QVector{0, 0, 0, 1, 1, 0}}));
  CHECK(span_of_brackets(a, d2, d2).is_zero());
  const ClassificationReport r = classify(a);
  CHECK(r.lie_nilpotent.holds == false);
  CHECK(r.derived_codim == 1);
  CHECK_FALSE(r.derived_abelian.holds);
}

TEST_CASE("parab and fili") {
  CHECK(char_poly_lsa(parab_delta(3)) == parse_poly("1 + x3 - 1/2*x1^2 - 1/2*x2^2", 3));
  const Algebra f = fili(2);
  CHECK(f.basis_product(0, 0) == QVector{0, 1});
  CHECK(is_zero(f.basis_product(0, 1)));
  CHECK(is_zero(f.basis_product(1, 1)));
  CHECK(char_poly_lsa(fili(4)) == MPoly::constant(4, 1));
  const QMatrix g(2, 2, {0, 1, 1, 0});
  const Algebra p = parab(g);
  CHECK(char_poly_lsa(p) == parse_poly("1 + x3 - x1*x2", 3));
  try {
    parab(QMatrix(2, 2, {1, 1, 1, 1}));
    FAIL("degenerate metric accepted");
  } catch (const CodedError& e) {
    CHECK(e.code() == "DEGENERATE_METRIC");
  }
}

TEST_CASE("negeig families") {
  for (const Rational& s : {Rational(2), make_rational(1, 3), Rational(0), Rational(1)}) {
    const Algebra a = negeig(sigma_family(s));
    CHECK(char_poly_lsa(a) == parse_poly("1 + x4 - x1*x3 - 1/2*x2^2", 4));
    const Subspace d1 = span_of_brackets(a, Subspace::whole(4), Subspace::whole(4));
    CHECK(span_of_brackets(a, d1, d1).is_zero());
    if (s != 0 && s != 1) {
      CHECK(d1.dim() == 3);
      CHECK(d1 == Subspace(4, kernel_basis(QMatrix::from_rows({trace_right_covector(a)}, 4))));
    }
  }
  // P and tau do not see N
  const Algebra j0 = negeig(jordan_family(0)), j1 = negeig(jordan_family(1)), j5 = negeig(jordan_family(5));
  CHECK(char_poly_lsa(j1) == char_poly_lsa(j0));
  CHECK(char_poly_lsa(j5) == char_poly_lsa(j0));
  CHECK(trace_form(j1).tau == trace_form(j0).tau);
  CHECK(trace_form(j5).tau == trace_form(j0).tau);
  CHECK_FALSE(j1.same_structure(j0));
  // same polynomial as sigma = 2, different derivation spectrum
  CHECK(char_poly_lsa(j1) == char_poly_lsa(negeig(sigma_family(2))));
}

TEST_CASE("negeig parameter identities") {
  CHECK(code_of(sigma_family(make_rational(2, 7))) == "");
  CHECK(code_of(jordan_family(3)) == "");
  CHECK(code_of(negeig_degenerate()) == "");
  NegeigParams bad_d = sigma_family(2);
  bad_d.D(1, 1) = 1;
  CHECK(code_of(bad_d) == "IDENTITY_FAILED");
  NegeigParams bad_n = jordan_family(1);
  bad_n.D = QMatrix::diagonal({make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)});
  CHECK(code_of(bad_n) == "IDENTITY_FAILED");
  NegeigParams bad_skew = sigma_family(2);
  bad_skew.N(0, 0) = 1;
  CHECK(code_of(bad_skew) == "IDENTITY_FAILED");
  NegeigParams zero_alpha = sigma_family(2);
  zero_alpha.alpha = 0;
  CHECK_THROWS_AS(check_negeig_params(zero_alpha), PreconditionError);
}

TEST_CASE("every generator produces a validated left-symmetric algebra") {
  const auto corpus = builtin_corpus();
  CHECK(corpus.size() >= 20);
  for (const Algebra& a : corpus) {
    CAPTURE(a.name());
    CHECK(a.validated());
    CHECK(validate_lsa(a).ok);
  }
  CHECK_THROWS_AS(cayley(0), PreconditionError);
  CHECK_THROWS_AS(fili(0), PreconditionError);
}
