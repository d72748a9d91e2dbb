#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lsa {

// mpq_class arithmetic results are always canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using QVector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws PreconditionError on malformed text, CodedError
// "ZERO_DENOMINATOR" on q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const QVector& v);

bool is_integer(const Rational& q);
int sign(const Rational& q);

QVector unit_vector(std::size_t n, std::size_t i);
QVector zero_vector(std::size_t n);
bool is_zero(const QVector& v);
Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);

}  // namespace lsa
