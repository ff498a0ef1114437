#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stpq {

/// Violated operation precondition: dimension mismatch, zero denominator,
/// different shape ratios, and the like.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Positions are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0)
      : std::runtime_error(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace stpq
