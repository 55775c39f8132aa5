#pragma once

#include <stdexcept>
#include <string>

namespace msa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, dangling endpoints, unparsable rationals.
/// `where` names the line or JSON field the problem was found at.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// An exhaustive search or enumeration would exceed its configured cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain (wrong path lengths, bad indices,
/// rank-deficient frames, shape mismatches).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace msa
