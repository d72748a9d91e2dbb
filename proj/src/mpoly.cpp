#include "lsa/mpoly.hpp"

#include <cmath>

#include "lsa/errors.hpp"

namespace lsa {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("MPoly::variable: index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(m, 1);
}

MPoly MPoly::linear(const QVector& coeffs) {
  MPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

MPoly MPoly::monomial(const Monomial& m, const Rational& c) {
  MPoly p(m.size());
  p.add_term(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MPoly::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

Rational MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first));
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw DimensionError("MPoly::add_term: monomial length != nvars");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::homogeneous_component(unsigned d) const {
  MPoly p(nvars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == d) p.terms_.emplace(m, c);
  return p;
}

MPoly MPoly::derivative(std::size_t i) const {
  if (i >= nvars_) throw DimensionError("MPoly::derivative: index out of range");
  MPoly p(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    --d[i];
    p.add_term(d, c * static_cast<unsigned long>(m[i]));
  }
  return p;
}

Rational MPoly::evaluate(const QVector& point) const {
  if (point.size() != nvars_) throw DimensionError("MPoly::evaluate: point length != nvars");
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    s += t;
  }
  return s;
}

double MPoly::evaluate(const std::vector<double>& point) const {
  if (point.size() != nvars_) throw DimensionError("MPoly::evaluate: point length != nvars");
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) t *= std::pow(point[i], static_cast<int>(m[i]));
    s += t;
  }
  return s;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars_) throw DimensionError("MPoly::substitute: image count != nvars");
  const std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& q : images)
    if (q.nvars() != target) throw DimensionError("MPoly::substitute: images disagree on nvars");
  // cache powers of each image
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly out(target);
  for (const auto& [m, c] : terms_) {
    MPoly t = MPoly::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MPoly::constant(target, 1));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[m[i]];
    }
    out += t;
  }
  return out;
}

MPoly MPoly::substitute_affine(const QVector& direction) const {
  if (direction.size() != nvars_) throw DimensionError("substitute_affine: direction length != nvars");
  const std::size_t m = nvars_ + 1;
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < nvars_; ++i)
    images.push_back(MPoly::variable(m, i) + direction[i] * MPoly::variable(m, nvars_));
  return substitute(images);
}

MPoly MPoly::extend(std::size_t nvars) const {
  if (nvars < nvars_) throw DimensionError("MPoly::extend: cannot shrink");
  MPoly p(nvars);
  for (const auto& [m, c] : terms_) {
    Monomial e = m;
    e.resize(nvars, 0);
    p.terms_.emplace(std::move(e), c);
  }
  return p;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw DimensionError("MPoly +: nvars mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw DimensionError("MPoly -: nvars mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("MPoly *: nvars mismatch");
  MPoly p(a.nvars());
  Monomial m(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

MPoly pow(const MPoly& a, unsigned k) {
  MPoly r = MPoly::constant(a.nvars(), 1), b = a;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

MPoly exact_div(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw InternalError("exact_div: division by zero polynomial");
  if (f.nvars() != g.nvars()) throw DimensionError("exact_div: nvars mismatch");
  const auto& [lg, cg] = *g.terms().rbegin();
  MPoly rem = f, q(f.nvars());
  while (!rem.is_zero()) {
    const auto& [lr, cr] = *rem.terms().rbegin();
    Monomial d(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < lg[i]) throw InternalError("exact_div: nonzero remainder");
      d[i] = lr[i] - lg[i];
    }
    MPoly t = MPoly::monomial(d, cr / cg);
    q += t;
    rem -= t * g;
  }
  return q;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational a = abs(c);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) s += a.get_str();
    else if (a == 1) s += mono;
    else s += a.get_str() + "*" + mono;
  }
  return s;
}

MPoly directional_derivative(const MPoly& p, const QVector& v) {
  if (v.size() != p.nvars()) throw DimensionError("directional_derivative: length mismatch");
  MPoly d(p.nvars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) d += v[i] * p.derivative(i);
  return d;
}

std::vector<MPoly> gradient(const MPoly& p) {
  std::vector<MPoly> g;
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(p.derivative(i));
  return g;
}

}  // namespace lsa
