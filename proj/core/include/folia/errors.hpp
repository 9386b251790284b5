#pragma once

#include <stdexcept>
#include <string>

namespace folia {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; position is a 1-based offset into the source string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Invalid arguments and violated preconditions.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant: a solver postcondition or a certificate
// re-check failed.  These are bugs or exhausted retry budgets, never bad
// user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace folia
