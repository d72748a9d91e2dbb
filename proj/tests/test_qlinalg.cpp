#include <doctest.h>

#include "lsa/eigen.hpp"
#include "lsa/errors.hpp"
#include "lsa/qmatrix.hpp"
#include "lsa/subspace.hpp"
#include "oracles.hpp"

using namespace lsa;

namespace {

QMatrix m2(long a, long b, long c, long d) { return QMatrix(2, 2, {a, b, c, d}); }

}  // namespace

TEST_CASE("rationals are canonical") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(parse_rational("-6/4") == q);
  CHECK(to_string(q) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), CodedError);
  CHECK_THROWS_AS(parse_rational("1/x"), PreconditionError);
  CHECK_THROWS_AS(parse_rational(""), PreconditionError);
}

TEST_CASE("det on small cases") {
  CHECK(det(QMatrix::identity(3)) == 1);
  CHECK(det(m2(1, 1, 1, 1)) == 0);
  CHECK(det(m2(1, 2, 3, 4)) == -2);
  CHECK(det(QMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det(QMatrix(2, 3)), DimensionError);
}

TEST_CASE("det agrees with the Leibniz formula") {
  oracle::Rng rng(11);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      QMatrix m = rng.matrix(n, n);
      if (trial % 4 == 0 && n > 1)  // force a dependent row
        for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 2 * m(0, j) - m(1 % n, j);
      CHECK(det(m) == oracle::leibniz_det(m));
    }
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(QMatrix::identity(2)).empty());
  const auto z = kernel_basis(QMatrix(2, 2));
  REQUIRE(z.size() == 2);
  CHECK(z[0] == unit_vector(2, 0));
  CHECK(z[1] == unit_vector(2, 1));
  const auto k = kernel_basis(m2(1, 1, 1, 1));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == QVector{1, -1});
}

TEST_CASE("rank plus nullity equals columns, kernel vectors are annihilated") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = rng.integer(1, 5), c = rng.integer(1, 5);
    QMatrix m = rng.matrix(r, c);
    if (trial % 3 == 0)
      for (std::size_t i = 0; i < r; ++i) m(i, c - 1) = m(i, 0);
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == c);
    for (const auto& v : k) CHECK(is_zero(m * v));
  }
}

TEST_CASE("solve and inverse") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const QMatrix m = rng.matrix(4, 4);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (det(m) != 0));
    if (inv) CHECK(m * *inv == QMatrix::identity(4));
    const QVector b = rng.vector(4);
    if (auto x = solve(m, b)) CHECK(m * *x == b);
  }
  CHECK_FALSE(solve(m2(1, 1, 1, 1), QVector{1, 0}).has_value());
  CHECK_FALSE(inverse(m2(1, 1, 1, 1)).has_value());
}

TEST_CASE("subspace operations") {
  const Subspace a(3, {QVector{1, 1, 0}, QVector{2, 2, 0}});
  CHECK(a.dim() == 1);
  const Subspace b(3, {QVector{0, 1, 0}});
  CHECK((a + b).dim() == 2);
  CHECK(intersect(a, b).is_zero());
  CHECK(intersect(a + b, Subspace(3, {QVector{1, 0, 0}})).dim() == 1);
  CHECK((a + b).contains(QVector{3, -1, 0}));
  CHECK_FALSE((a + b).contains(QVector{0, 0, 1}));
  CHECK(Subspace(3, a.complement()).dim() == 2);
  CHECK((a + Subspace(3, a.complement())).is_whole());
  for (const auto& w : a.annihilator()) CHECK(dot(w, QVector{1, 1, 0}) == 0);
}

TEST_CASE("rational_eigendata examples") {
  SUBCASE("diag(1/2, 1)") {
    const EigenData e = rational_eigendata(QMatrix::diagonal({make_rational(1, 2), 1}));
    REQUIRE(e.rational_roots.size() == 2);
    CHECK(e.rational_roots[0] == std::pair<Rational, unsigned>{make_rational(1, 2), 1});
    CHECK(e.rational_roots[1] == std::pair<Rational, unsigned>{1, 1});
    CHECK(e.splits_over_Q);
    CHECK_FALSE(e.nilpotent);
  }
  SUBCASE("nilpotent Jordan block") {
    const EigenData e = rational_eigendata(m2(0, 1, 0, 0));
    REQUIRE(e.rational_roots.size() == 1);
    CHECK(e.rational_roots[0] == std::pair<Rational, unsigned>{0, 2});
    CHECK(e.nilpotent);
    CHECK(e.gen_eigenspaces.at(0).size() == 2);
  }
  SUBCASE("rotation") {
    const EigenData e = rational_eigendata(m2(0, -1, 1, 0));
    CHECK(e.char_poly == UPoly({1, 0, 1}));
    CHECK(e.rational_roots.empty());
    CHECK_FALSE(e.splits_over_Q);
  }
}

TEST_CASE("rational roots with multiplicity") {
  // (t - 2/3)^2 (t + 5) t (t^2 + 2)
  UPoly p({1});
  auto times = [&](const UPoly& f) {
    std::vector<Rational> c(p.coeffs().size() + f.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      for (std::size_t j = 0; j < f.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * f.coeffs()[j];
    p = UPoly(c);
  };
  times(UPoly({make_rational(-2, 3), 1}));
  times(UPoly({make_rational(-2, 3), 1}));
  times(UPoly({5, 1}));
  times(UPoly({0, 1}));
  times(UPoly({2, 0, 1}));
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == std::pair<Rational, unsigned>{-5, 1});
  CHECK(roots[1] == std::pair<Rational, unsigned>{0, 1});
  CHECK(roots[2] == std::pair<Rational, unsigned>{make_rational(2, 3), 2});
}

TEST_CASE("eigendata invariants on random matrices with rational spectrum") {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = rng.integer(2, 5);
    // conjugate a block upper-triangular matrix with rational diagonal and one rotation block
    QMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      t(i, i) = rng.integer(-2, 2);
      for (std::size_t j = i + 1; j < n; ++j) t(i, j) = rng.rational();
    }
    const bool rotate = trial % 3 == 0;
    if (rotate) {
      t(1, 0) = -1;
      t(0, 1) = 1;
      t(0, 0) = t(1, 1) = 0;
    }
    QMatrix b = rng.matrix(n, n);
    while (det(b) == 0) b = rng.matrix(n, n);
    const QMatrix m = conjugate(t, b);
    const EigenData e = rational_eigendata(m);
    // char_poly(M) is the Leibniz determinant of tI - M at sample points
    for (long s = -2; s <= 2; ++s) CHECK(e.char_poly.eval(s) == oracle::leibniz_det(Rational(s) * QMatrix::identity(n) - m));
    std::size_t total = 0, dims = 0;
    for (const auto& [alpha, mult] : e.rational_roots) {
      total += mult;
      const auto& basis = e.gen_eigenspaces.at(alpha);
      dims += basis.size();
      CHECK(basis.size() == mult);
      const QMatrix shifted = (m - alpha * QMatrix::identity(n)).pow(static_cast<unsigned>(n));
      for (const auto& v : basis) CHECK(is_zero(shifted * v));
    }
    CHECK(total <= n);
    CHECK(e.splits_over_Q == (total == n));
    CHECK(e.splits_over_Q == !rotate);
    if (e.splits_over_Q) {
      std::vector<QVector> all;
      for (const auto& [alpha, basis] : e.gen_eigenspaces) all.insert(all.end(), basis.begin(), basis.end());
      CHECK(Subspace(n, all).is_whole());
      CHECK(dims == n);
    }
  }
}

TEST_CASE("conjugate and triangularity helpers") {
  const QMatrix b = m2(1, 1, 0, 1);
  const QMatrix m = m2(2, 0, 0, 3);
  CHECK(b * conjugate(m, b) == m * b);
  CHECK(is_lower_triangular(m2(1, 0, 5, 2)));
  CHECK_FALSE(is_lower_triangular(m2(1, 5, 0, 2)));
  CHECK(is_nilpotent(m2(0, 1, 0, 0)));
  CHECK_FALSE(is_nilpotent(m2(1, 0, 0, 0)));
}
