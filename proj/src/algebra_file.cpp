#include "lsa/algebra_file.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace lsa {

namespace {

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  std::size_t column() const { return pos_ + 1; }
  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg, const std::string& code = "SYNTAX") const {
    throw ParseError(code, line_, column(), msg);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string_view word() {
    skip_space();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                s_[pos_] == '.' || s_[pos_] == '-'))
      ++pos_;
    return s_.substr(b, pos_ - b);
  }
  std::string_view digits() {
    skip_space();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    return s_.substr(b, pos_ - b);
  }
  // Index in 1..bound; returns 0-based.
  std::size_t index(std::size_t bound, const char* what) {
    skip_space();
    const std::size_t col = column();
    const std::string_view d = digits();
    const std::size_t sig = d.find_first_not_of('0');
    if (sig == std::string_view::npos || d.size() - sig > 9 || std::stoul(std::string(d)) > bound)
      throw ParseError("INDEX_OUT_OF_RANGE", line_, col,
                       std::string(what) + " " + std::string(d) + " not in 1.." + std::to_string(bound));
    return std::stoul(std::string(d)) - 1;
  }
  Rational coefficient(bool negate) {
    skip_space();
    const std::size_t col = column();
    bool neg = negate;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      if (s_[pos_] == '-') neg = !neg;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a coefficient");
    const mpz_class num{std::string(digits())};
    mpz_class den = 1;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a denominator");
      den = mpz_class{std::string(digits())};
      if (den == 0) throw ParseError("ZERO_DENOMINATOR", line_, col, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool valid_identifier(std::string_view id) {
  return !id.empty() && (std::isalpha(static_cast<unsigned char>(id.front())) || id.front() == '_');
}

}  // namespace

Algebra parse_algebra_file(std::string_view text, std::size_t max_dim) {
  std::string name;
  bool have_name = false, have_dim = false;
  Algebra a;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineCursor cur(line, lineno);
    if (cur.at_end()) continue;
    const std::size_t kw_col = cur.column();
    const std::string_view kw = cur.word();
    if (kw == "lsa") {
      if (have_name) throw ParseError("SYNTAX", lineno, kw_col, "repeated 'lsa' header");
      const std::size_t col = (cur.skip_space(), cur.column());
      const std::string_view id = cur.word();
      if (!valid_identifier(id)) throw ParseError("SYNTAX", lineno, col, "expected an identifier");
      name = std::string(id);
      have_name = true;
    } else if (kw == "dim") {
      if (!have_name) throw ParseError("SYNTAX", lineno, kw_col, "'dim' before 'lsa' header");
      if (have_dim) throw ParseError("SYNTAX", lineno, kw_col, "repeated 'dim'");
      const std::size_t col = (cur.skip_space(), cur.column());
      const std::string_view d = cur.digits();
      const std::size_t sig = d.find_first_not_of('0');
      if (sig == std::string_view::npos) throw ParseError("SYNTAX", lineno, col, "dimension must be positive");
      if (d.size() - sig > 9 || std::stoul(std::string(d)) > max_dim)
        throw CapExceeded("dimension " + std::string(d) + " exceeds the cap " + std::to_string(max_dim));
      a = Algebra(name, std::stoul(std::string(d)));
      have_dim = true;
    } else if (kw == "prod") {
      if (!have_dim) throw ParseError("SYNTAX", lineno, kw_col, "'prod' before 'dim'");
      const std::size_t n = a.dim();
      const std::size_t col = (cur.skip_space(), cur.column());
      const std::size_t i = cur.index(n, "left index");
      const std::size_t j = cur.index(n, "right index");
      if (!seen.insert({i, j}).second)
        throw ParseError("DUPLICATE_PRODUCT", lineno, col,
                         "product " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " given twice");
      cur.expect(':');
      std::set<std::size_t> ks;
      bool negate = false;
      while (true) {
        const Rational c = cur.coefficient(negate);
        cur.expect('*');
        if (cur.peek() != 'e') cur.fail("expected e<k>");
        cur.expect('e');
        const std::size_t kcol = cur.column();
        const std::size_t k = cur.index(n, "basis index");
        if (!ks.insert(k).second) throw ParseError("SYNTAX", lineno, kcol, "repeated basis element in one product");
        a.set(i, j, k, c);
        if (cur.at_end()) break;
        const char sep = cur.peek();
        if (sep != '+' && sep != '-') cur.fail("expected '+', '-' or end of line");
        cur.expect(sep);
        negate = sep == '-';
      }
    } else {
      throw ParseError("SYNTAX", lineno, kw_col, "expected 'lsa', 'dim' or 'prod'");
    }
    if (!cur.at_end()) cur.fail("unexpected trailing text");
  }
  if (!have_name) throw ParseError("SYNTAX", lineno, 1, "missing 'lsa' header");
  if (!have_dim) throw ParseError("SYNTAX", lineno, 1, "missing 'dim' line");
  return a;
}

std::string serialize_algebra(const Algebra& a) {
  std::ostringstream out;
  out << "lsa " << a.name() << "\n" << "dim " << a.dim() << "\n";
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool first = true;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = a.c(i, j, k);
        if (c == 0) continue;
        out << (first ? "prod " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " : " : " + ")
            << c.get_str() << "*e" << k + 1;
        first = false;
      }
      if (!first) out << "\n";
    }
  return out.str();
}

}  // namespace lsa
