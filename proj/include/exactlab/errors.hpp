#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactlab {

/// Base class for every mathematical precondition violation raised by the library.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero: 0 has no multiplicative inverse") {}
};

/// Malformed textual input. Carries the byte offset of the failure and the
/// set of tokens that would have been accepted there.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail = {});

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace exactlab
