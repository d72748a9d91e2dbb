#include <doctest.h>

#include <cmath>

#include "lsa/builtins.hpp"
#include "lsa/errors.hpp"
#include "lsa/flow.hpp"
#include "lsa/koszul.hpp"
#include "lsa/ma_verify.hpp"
#include "lsa/poly_matrix.hpp"
#include "lsa/poly_parse.hpp"
#include "oracles.hpp"

using namespace lsa;

namespace {

Rational cayley_kappa(long n) {
  Rational k = 1;
  for (long i = 0; i <= n; ++i) k *= n;
  return (n * (n - 1) / 2) % 2 == 0 ? k : Rational(-k);
}

}  // namespace

TEST_CASE("translational axes") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const MPoly p = char_poly_lsa(cayley(n));
    const auto ax = translational_axis(p, scale(make_rational(1, static_cast<long>(n)), unit_vector(n, n - 1)));
    REQUIRE(ax.has_value());
    CHECK(ax->lambda == 1);
    const auto found = translational_axis(p);
    REQUIRE(found.has_value());
    CHECK(found->v == ax->v);
  }
  const auto e3 = translational_axis(parse_poly("x3 - x1^2 - x2^2"));
  REQUIRE(e3.has_value());
  CHECK(e3->v == unit_vector(3, 2));
  CHECK(e3->lambda == 1);
  CHECK_FALSE(translational_axis(parse_poly("x1^2")).has_value());
  CHECK_FALSE(translational_axis(parse_poly("x3 - x1^2 - x2^2"), QVector{1, 0, 0}).has_value());
}

TEST_CASE("Monge-Ampere constants of the hand examples") {
  const MAReport a = ma_constant(parse_poly("x3 - x1^2 - x2^2"));
  REQUIRE(a.kappa.has_value());
  CHECK(*a.kappa == 4);
  CHECK(a.sign_of_kappa == 1);
  const MAReport b = ma_constant(parse_poly("1/3*x1^3 - x1*x2 + x3"));
  REQUIRE(b.kappa.has_value());
  CHECK(*b.kappa == -1);
  CHECK(b.sign_of_kappa == -1);
  const MAReport c = ma_constant(char_poly_lsa(cayley(2)), nullptr);
  REQUIRE(c.kappa.has_value());
  CHECK(*c.kappa == -8);
  // det = 4 + 8 (x1^2 + x2^2)
  CHECK_FALSE(ma_constant(parse_poly("x1^2 + x2^2")).kappa.has_value());
}

TEST_CASE("determinant agrees with the Leibniz oracle") {
  for (const char* s : {"x3 - x1^2 - x2^2", "1/3*x1^3 - x1*x2 + x3", "x1^2*x2 + x2^3 - x3*x1"}) {
    const MPoly p = parse_poly(s);
    CHECK(ma_constant(p).determinant == oracle::leibniz_det(twisted_hessian(p, 1)));
  }
}

TEST_CASE("Cayley kappa law") {
  for (long n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const Algebra a = cayley(static_cast<std::size_t>(n));
    const MAReport r = ma_constant(char_poly_lsa(a), &a);
    REQUIRE(r.kappa.has_value());
    CHECK(*r.kappa == cayley_kappa(n));
    CHECK(*r.trace_condition);
    CHECK(*r.euler_identity);
  }
  CHECK(cayley_kappa(2) == -8);
  CHECK(cayley_kappa(3) == -81);
  CHECK(cayley_kappa(4) == 1024);
  CHECK(cayley_kappa(5) == 15625);
  CHECK(cayley_kappa(6) == -279936);
}

TEST_CASE("six_dim Monge-Ampere data") {
  const Algebra a = six_dim();
  const MPoly p = char_poly_lsa(a);
  const MAReport r = ma_constant(p, &a);
  REQUIRE(r.kappa.has_value());
  CHECK(*r.kappa == -7776);
  CHECK(*r.trace_condition);
  CHECK(*r.euler_identity);
  // P - 1 - x6 as a function of x1..x5
  const MPoly q = p - MPoly::constant(6, 1) - MPoly::variable(6, 5);
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < 5; ++i) images.push_back(MPoly::variable(5, i));
  images.push_back(MPoly(5));
  const MPoly q5 = q.substitute(images);
  CHECK(q5.extend(6) == q);
  CHECK(oracle::leibniz_det(hessian(q5)) == MPoly::constant(5, -7776));
  const GraphRestriction g = graph_restrict(p, r.axis->v);
  CHECK(g.coordinate == 5);
  CHECK(g.v_k == 1);
  CHECK(g.hessian_det == MPoly::constant(5, 7776));
}

TEST_CASE("Euler identity") {
  CHECK(euler_check(cayley(2), char_poly_lsa(cayley(2)), QVector{0, make_rational(1, 2)}));
  CHECK_FALSE(euler_check(cayley(2), char_poly_lsa(cayley(2)), QVector{0, 1}));
  CHECK(euler_check(six_dim(), char_poly_lsa(six_dim()), unit_vector(6, 5)));
  for (std::size_t n = 2; n <= 5; ++n) {
    const Algebra a = parab_delta(n);
    CHECK(euler_check(a, char_poly_lsa(a), principal_idempotent(a).u));
  }
}

TEST_CASE("graph restriction") {
  const GraphRestriction c = graph_restrict(char_poly_lsa(cayley(2)), QVector{0, make_rational(1, 2)});
  CHECK(c.coordinate == 1);
  CHECK(c.v_k == make_rational(1, 2));
  CHECK(c.f == make_rational(1, 2) * MPoly::variable(1, 0) * MPoly::variable(1, 0));
  CHECK(c.hessian_det == MPoly::constant(1, 1));
  const MPoly p = parse_poly("x3 - x1^2 - x2^2");
  const GraphRestriction s = graph_restrict(p, unit_vector(3, 2));
  CHECK(s.f == parse_poly("1 + x1^2 + x2^2", 2));
  CHECK(s.hessian_det == MPoly::constant(2, 4));
  CHECK_THROWS_AS(graph_restrict(p, QVector{0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(graph_restrict(p, QVector{0, 0, 2}), PreconditionError);
  // the level set {P = 1} is the graph of f along v
  oracle::Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const QVector w = rng.vector(2);
    const QVector x{w[0], w[1], s.f.evaluate(w)};
    CHECK(p.evaluate(x) == 1);
  }
}

TEST_CASE("scaling identity") {
  for (const char* s : {"x3 - x1^2 - x2^2", "1/3*x1^3 - x1*x2 + x3"})
    for (long c : {2L, -1L, 5L}) CHECK(scaling_identity_holds(parse_poly(s), c));
  CHECK(scaling_identity_holds(char_poly_lsa(cayley(4)), 3));
  CHECK_FALSE(scaling_identity_holds(parse_poly("x1^2 + x2^2"), 2));
}

TEST_CASE("matrix exponential") {
  const auto e = matrix_exp({{0, 1}, {-1, 0}});
  CHECK(e[0][0] == doctest::Approx(std::cos(1.0)).epsilon(1e-13));
  CHECK(e[0][1] == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
  const auto d = matrix_exp({{3, 0}, {0, -2}});
  CHECK(d[0][0] == doctest::Approx(std::exp(3.0)).epsilon(1e-13));
  CHECK(d[1][1] == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
  CHECK(d[0][1] == 0);
}

TEST_CASE("flow samples") {
  // L = 0: the flow is the translation x0 + t a
  const FlowSample tr = flow_sample(trivial(2), {1, -2}, {0.5, 0.25}, 0.5);
  CHECK(tr.endpoint[0] == doctest::Approx(1.0));
  CHECK(tr.endpoint[1] == doctest::Approx(-0.75));
  CHECK(tr.character_residual < 1e-12);
  const FlowSample zero = flow_sample(cayley(3), {0.3, -0.2, 0.7}, {0.1, 0.2, -0.4}, 0);
  CHECK(zero.endpoint == std::vector<double>{0.1, 0.2, -0.4});
  CHECK(zero.character_residual == 0);
  oracle::Rng rng(42);
  std::vector<Algebra> algebras{cayley(2), cayley(3), cayley(4), parab_delta(3), six_dim(), fili(3),
                                negeig(sigma_family(2))};
  for (const Algebra& a : algebras) {
    CAPTURE(a.name());
    const MPoly p = char_poly_lsa(a);
    for (double t : {0.1, 0.5, 1.0}) {
      std::vector<double> dir(a.dim()), x0(a.dim());
      for (auto& v : dir) v = rng.uniform(-1, 1);
      for (auto& v : x0) v = rng.uniform(-1, 1);
      const FlowSample s = flow_sample(a, p, dir, x0, t);
      CHECK(s.character_residual < 1e-9);
      CHECK(s.within_tolerance);
    }
  }
  CHECK_FALSE(flow_sample(cayley(2), {1, 1}, {0, 0}, 1.0, -1.0).within_tolerance);
}
