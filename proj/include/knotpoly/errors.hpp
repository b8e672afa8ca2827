#pragma once

#include <stdexcept>
#include <string>

namespace knotpoly {

// Malformed text, JSON or arguments. CLI exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A named precondition of an operation does not hold. CLI exit status 2.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string clause, const std::string& detail)
      : std::runtime_error(clause + ": " + detail), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

// Internal consistency check failed. CLI exit status 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace knotpoly
