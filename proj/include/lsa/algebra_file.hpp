#pragma once

#include <string>
#include <string_view>

#include "lsa/algebra.hpp"
#include "lsa/errors.hpp"

namespace lsa {

// Codes: SYNTAX, INDEX_OUT_OF_RANGE, DUPLICATE_PRODUCT, ZERO_DENOMINATOR. Positions are 1-based.
class ParseError : public CodedError {
 public:
  ParseError(const std::string& code, std::size_t line, std::size_t column, const std::string& msg)
      : CodedError(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// Grammar, one item per line, '#' starts a comment:
//   lsa <identifier>
//   dim <n>
//   prod <i> <j> : <coef>*e<k> [+ <coef>*e<k>]...
// The result is not validated. Throws CapExceeded when dim > max_dim.
Algebra parse_algebra_file(std::string_view text, std::size_t max_dim = kDefaultMaxDim);

// Products ordered by (i, j), terms by k; zero products omitted.
std::string serialize_algebra(const Algebra& a);

}  // namespace lsa
