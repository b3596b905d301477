#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace magma {

// Exit codes shared between the library error types and the CLI.
enum ExitCode : int {
  exit_ok = 0,
  exit_parse = 2,
  exit_budget = 3,
  exit_hypothesis = 4,
  exit_internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(const std::string& msg, int code) : std::runtime_error(msg), code_(code) {}
  int exit_code() const noexcept { return code_; }

 private:
  int code_;
};

// Malformed input text: bad syntax, or a symbol outside the session alphabet.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")", exit_parse),
        offset_(offset) {}
  explicit ParseError(const std::string& msg) : Error(msg, exit_parse), offset_(0) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An enumeration or expansion would exceed the configured monomial budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& msg, const std::string& estimate)
      : Error(msg + " (estimated " + estimate + " monomials)", exit_budget),
        estimate_(estimate) {}
  // Decimal string; slice sizes overflow machine words long before they
  // overflow anyone's patience.
  const std::string& estimate() const noexcept { return estimate_; }

 private:
  std::string estimate_;
};

// A caller-supplied precondition or theorem hypothesis does not hold.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& msg) : Error(msg, exit_hypothesis) {}
};

// A violated internal invariant. Always a bug, never bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg, exit_internal) {}
};

}  // namespace magma
