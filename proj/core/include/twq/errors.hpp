#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twq {

// Malformed input text. line() is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input is well-formed but outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal invariant was breached. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A brute-force oracle refused an instance that is too large for it.
class OracleTooBig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twq
