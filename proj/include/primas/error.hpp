#pragma once

#include <stdexcept>
#include <string>

namespace primas {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text does not conform to the grammar; position is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Operands live over different coefficient domains or value groups.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// A computation exceeded its configured pair/step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A witness search ran out of budget without a proof either way.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

// Operation applied to a value outside its defined domain (unit ideal,
// zero module, unsupported backend, ...).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace primas
