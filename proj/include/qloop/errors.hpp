#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qloop {

/// Base of every error raised by the library. The C API maps each subclass
/// onto one status code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed table or permutation text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Element out of range, or degrees that do not agree.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The operand lacks required structure (not latin, no identity, ...).
class StructureError : public Error {
public:
  using Error::Error;
};

/// A caller-supplied relationship does not actually hold.
class ContractError : public Error {
public:
  using Error::Error;
};

/// A conditional construction was invoked outside its hypothesis.
class HypothesisError : public Error {
public:
  using Error::Error;
};

/// Search or enumeration would exceed the configured limit.
class BudgetError : public Error {
public:
  using Error::Error;
};

} // namespace qloop
