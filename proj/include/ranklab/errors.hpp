#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

/// Malformed scalar text. `token()` is the exact offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, const std::string& reason)
      : std::runtime_error("cannot parse scalar '" + token + "': " + reason),
        token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// An argument outside an operation's mathematical domain (e.g. g <= 0 for
/// the reduction, division by zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid sizes, counts or generator parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ranklab
