#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input: bad parameters, faces that are not in
/// the complex, non-pure complexes where purity is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A named precondition of an operation does not hold.
class PreconditionError : public InvalidInput {
 public:
  PreconditionError(const std::string& condition, const std::string& detail)
      : InvalidInput(condition + ": " + detail), condition_(condition) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// A configured resource cap (enumeration count, face count, vertex width)
/// was exceeded before the answer could be determined.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ekr
