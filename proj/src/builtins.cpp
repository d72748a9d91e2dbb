#include "lsa/builtins.hpp"

#include <functional>

#include "lsa/errors.hpp"

namespace lsa {

Algebra cayley(std::size_t n) {
  if (n < 1) throw PreconditionError("cayley: n must be >= 1");
  Algebra a("cayley" + std::to_string(n), n);
  // 0-based: e_{n-1} . e_b = (b+1) e_b ; e_a . e_b = e_{a+b+1} when a + b + 1 < n
  for (std::size_t b = 0; b < n; ++b) a.set(n - 1, b, b, Rational(static_cast<long>(b + 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j + 1 < n) a.set(i, j, i + j + 1, a.c(i, j, i + j + 1) + 1);
  return validated(a);
}

Algebra fili(std::size_t m) {
  if (m < 1) throw PreconditionError("fili: m must be >= 1");
  Algebra a("fili" + std::to_string(m), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i + j + 1 < m) a.set(i, j, i + j + 1, 1);
  return validated(a);
}

Algebra parab(const QMatrix& g) {
  if (!g.is_square()) throw DimensionError("parab: metric must be square");
  if (!is_symmetric(g)) throw CodedError("NOT_SYMMETRIC", "parab metric " + to_string(g));
  if (g.rows() > 0 && det(g) == 0) throw CodedError("DEGENERATE_METRIC", "parab metric " + to_string(g));
  const std::size_t m = g.rows(), n = m + 1, u = m;
  Algebra a("parab" + std::to_string(n), n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a.set(i, j, u, g(i, j));
    a.set(u, i, i, make_rational(1, 2));
  }
  a.set(u, u, u, 1);
  return validated(a);
}

Algebra parab_delta(std::size_t n) {
  if (n < 1) throw PreconditionError("parab: n must be >= 1");
  Algebra a = parab(QMatrix::identity(n - 1));
  a.set_name("parab_delta" + std::to_string(n));
  return validated(a);
}

Algebra six_dim() {
  Algebra a("six_dim", 6);
  // c(i, j, k) is the coefficient of x_i in entry (k, j) of L(x); 1-based below.
  struct Entry {
    int i, j, k;
    long num, den;
  };
  const Entry entries[] = {
      {6, 1, 1, 1, 4}, {6, 2, 2, 1, 4}, {6, 3, 3, 1, 2}, {2, 3, 4, 1, 1}, {6, 4, 4, 3, 4},
      {3, 1, 5, 1, 1}, {3, 2, 5, 1, 1}, {1, 3, 5, 1, 1}, {2, 3, 5, 2, 1}, {6, 5, 5, 3, 4},
      {4, 1, 6, 6, 1}, {5, 2, 6, 6, 1}, {3, 3, 6, 6, 1}, {1, 4, 6, 6, 1}, {2, 5, 6, 6, 1},
      {6, 6, 6, 1, 1},
  };
  for (const auto& e : entries) a.set(e.i - 1, e.j - 1, e.k - 1, make_rational(e.num, e.den));
  return validated(a);
}

Algebra trivial(std::size_t n) { return validated(Algebra("trivial" + std::to_string(n), n)); }

void check_negeig_params(const NegeigParams& p) {
  const std::size_t n = p.J.rows();
  if (!p.J.is_square() || p.D.rows() != n || p.D.cols() != n || p.N.rows() != n || p.N.cols() != n)
    throw DimensionError("negeig: J, D, N must be square of one size");
  if (p.alpha == 0) throw PreconditionError("negeig: alpha must be nonzero");
  if (!(p.D * p.J + p.J * p.D == p.J)) throw CodedError("IDENTITY_FAILED", "DJ + JD != J");
  if (!(p.D * p.N == p.N * p.D)) throw CodedError("IDENTITY_FAILED", "[D, N] != 0");
  if (!(p.N.transpose() * p.J == Rational(-1) * (p.J * p.N))) throw CodedError("IDENTITY_FAILED", "N^T J != -J N");
}

Algebra negeig(const NegeigParams& p, const std::string& name) {
  check_negeig_params(p);
  const std::size_t n = p.J.rows(), top = n;
  Algebra a(name, n + 1);
  const QMatrix dn = p.D + p.N;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a.set(i, j, top, p.alpha * p.J(i, j));
      a.set(top, j, i, dn(i, j));
    }
  a.set(top, top, top, 1);
  return validated(a);
}

namespace {

QMatrix antidiagonal(std::size_t n) {
  QMatrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
  return j;
}

}  // namespace

NegeigParams sigma_family(const Rational& sigma) {
  return {antidiagonal(3), QMatrix::diagonal({sigma, make_rational(1, 2), 1 - sigma}), QMatrix(3, 3), 1};
}

NegeigParams jordan_family(const Rational& t) {
  QMatrix n(3, 3);
  n(1, 0) = t;
  n(2, 1) = -t;
  return {antidiagonal(3), make_rational(1, 2) * QMatrix::identity(3), n, 1};
}

NegeigParams negeig_degenerate() { return {antidiagonal(2), QMatrix::diagonal({1, 0}), QMatrix(2, 2), 1}; }

namespace {

void partitions(std::size_t rest, std::size_t max_part, std::vector<std::size_t>& cur,
                const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (rest == 0) {
    emit(cur);
    return;
  }
  for (std::size_t p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(rest - p, p, cur, emit);
    cur.pop_back();
  }
}

mpz_class factorial(std::size_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

}  // namespace

MPoly eastwood_ezhov_partition_sum(std::size_t n) {
  if (n < 1) throw PreconditionError("eastwood_ezhov: n must be >= 1");
  MPoly phi(n);
  std::vector<std::size_t> cur;
  partitions(n, n, cur, [&](const std::vector<std::size_t>& lam) {
    const std::size_t len = lam.size();
    // compositions with this multiset of parts: len! / prod (multiplicity)!
    std::vector<std::size_t> mult(n + 1, 0);
    for (auto p : lam) ++mult[p];
    mpz_class c = factorial(len);
    for (auto m : mult) c /= factorial(m);
    Monomial mono(n, 0);
    for (auto p : lam) ++mono[p - 1];
    Rational coef(c, static_cast<unsigned long>(len));
    coef.canonicalize();
    if (len % 2 == 1) coef = -coef;
    phi.add_term(mono, coef);
  });
  return phi;
}

MPoly eastwood_ezhov_recursion(std::size_t n) {
  if (n < 1) throw PreconditionError("eastwood_ezhov: n must be >= 1");
  std::vector<MPoly> phi(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    MPoly p = -MPoly::variable(n, k - 1);
    for (std::size_t i = 1; i < k; ++i)
      p += (make_rational(static_cast<long>(i), static_cast<long>(k)) - 1) * (MPoly::variable(n, i - 1) * phi[k - i]);
    phi[k] = p;
  }
  return phi[n];
}

MPoly eastwood_ezhov(std::size_t n) {
  MPoly a = eastwood_ezhov_partition_sum(n), b = eastwood_ezhov_recursion(n);
  require(a == b, "Eastwood-Ezhov: partition sum and recursion disagree");
  MPoly pn = char_poly_lsa(cayley(n));
  require(pn - MPoly::constant(n, 1) == Rational(-static_cast<long>(n)) * a, "Eastwood-Ezhov: P_n - 1 != -n Phi_n");
  return a;
}

std::vector<Algebra> builtin_corpus() {
  std::vector<Algebra> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(cayley(n));
  for (std::size_t m = 1; m <= 5; ++m) out.push_back(fili(m));
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(parab_delta(n));
  out.push_back(six_dim());
  out.push_back(negeig(sigma_family(2), "negeig_sigma2"));
  out.push_back(negeig(sigma_family(make_rational(1, 3)), "negeig_sigma1_3"));
  out.push_back(negeig(sigma_family(0), "negeig_sigma0"));
  out.push_back(negeig(jordan_family(1), "negeig_jordan1"));
  out.push_back(negeig(negeig_degenerate(), "negeig_degenerate"));
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(trivial(n));
  return out;
}

}  // namespace lsa
