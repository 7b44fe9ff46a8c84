#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kneserlab {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on parameters or inputs does not hold (r < 1, n < 2r, element out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration or exact search would exceed its configured size cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Malformed family text. `line()` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A candidate pool that a counting argument guarantees nonempty turned out empty.
// Seeing one of these means either the implementation or the argument is wrong.
class PoolExhaustedError : public Error {
 public:
  PoolExhaustedError(std::size_t pool_size, std::size_t forbidden_size, const std::string& what)
      : Error(what), pool_size_(pool_size), forbidden_size_(forbidden_size) {}

  std::size_t pool_size() const noexcept { return pool_size_; }
  std::size_t forbidden_size() const noexcept { return forbidden_size_; }

 private:
  std::size_t pool_size_;
  std::size_t forbidden_size_;
};

}  // namespace kneserlab
