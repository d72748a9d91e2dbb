#include "lsa/rational.hpp"

#include <cctype>

#include "lsa/errors.hpp"

namespace lsa {

Rational make_rational(long num, long den) {
  if (den == 0) throw CodedError("ZERO_DENOMINATOR", std::to_string(num) + "/0");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  const mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw CodedError("ZERO_DENOMINATOR", std::string(text));
  Rational q(n, d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "]";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

int sign(const Rational& q) { return sgn(q); }

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n, 0);
  v.at(i) = 1;
  return v;
}

QVector zero_vector(std::size_t n) { return QVector(n, 0); }

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector scale(const Rational& c, const QVector& v) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

}  // namespace lsa
