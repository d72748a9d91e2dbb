#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lsa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An identity that holds for every valid input failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Dimension above the configured soft cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Error carrying a stable machine-readable code such as "DEGENERATE_METRIC".
class CodedError : public Error {
 public:
  CodedError(std::string code, const std::string& detail)
      : Error(code + (detail.empty() ? "" : ": " + detail)), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace lsa
