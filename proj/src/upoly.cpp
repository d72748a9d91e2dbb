#include "lsa/upoly.hpp"

#include <algorithm>

#include "lsa/errors.hpp"

namespace lsa {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::eval(const Rational& t) const {
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

UPoly UPoly::deflate(const Rational& root) const {
  if (coeffs_.empty()) return *this;
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * root;
    q[i - 1] = carry;
  }
  require(coeffs_[0] + carry * root == 0, "UPoly::deflate: not a root");
  return UPoly(std::move(q));
}

std::string to_string(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = abs(c);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (i == 0) s += a.get_str();
    else {
      if (a != 1) s += a.get_str() + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p) {
  std::vector<std::pair<Rational, unsigned>> roots;
  if (p.degree() <= 0) return roots;
  UPoly q = p;
  unsigned zero_mult = 0;
  while (q.degree() > 0 && q.coeff(0) == 0) {
    q = q.deflate(0);
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(Rational(0), zero_mult);

  // integer coefficients for the rational root theorem
  mpz_class l = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> ints;
  for (const auto& c : q.coeffs()) ints.push_back(c * l);
  if (q.degree() > 0) {
    auto ps = divisors(ints.front().get_num());
    auto qs = divisors(ints.back().get_num());
    std::vector<Rational> cands;
    for (const auto& a : ps)
      for (const auto& b : qs) {
        Rational r(a, b);
        r.canonicalize();
        cands.push_back(r);
        cands.push_back(-r);
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands) {
      unsigned m = 0;
      while (q.degree() > 0 && q.eval(r) == 0) {
        q = q.deflate(r);
        ++m;
      }
      if (m) roots.emplace_back(r, m);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

}  // namespace lsa
