#include "lsa/poly_parse.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "lsa/errors.hpp"

namespace lsa {

namespace {

// The variable count comes from a pre-scan so every subterm lives in one ring.
class Parser {
 public:
  Parser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw CodedError("SYNTAX", "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (eat('*')) acc = acc * unary();
      else if (eat('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        acc *= 1 / d.constant_term();
      } else
        return acc;
    }
  }

  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (eat('^')) {
      std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      return pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      std::string d = digits();
      std::size_t idx = std::stoul(d);
      if (idx == 0 || idx > nvars_) fail("variable index out of range");
      return MPoly::variable(nvars_, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n(digits());
      return MPoly::constant(nvars_, Rational(n));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::size_t max_variable_index(std::string_view s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'x') continue;
    std::size_t j = i + 1, v = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) && j - i <= 6)
      v = v * 10 + static_cast<std::size_t>(s[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

MPoly parse_poly(std::string_view text, std::size_t min_nvars) {
  const std::size_t nvars = std::max(min_nvars, max_variable_index(text));
  return Parser(text, nvars).parse();
}

}  // namespace lsa
