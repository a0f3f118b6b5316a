#pragma once

#include <stdexcept>
#include <string>

namespace secmin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated. `clause` names it.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string clause, const std::string& what)
      : Error(what), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// A theorem check produced a counterexample. Since the checked statements
/// are theorems, this always means an implementation bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// An enumeration hit its work cap before finishing.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(double radius_sq, const std::string& what)
      : Error(what), radius_sq_(radius_sq) {}
  double attempted_radius_sq() const noexcept { return radius_sq_; }

 private:
  double radius_sq_;
};

/// Allocation for a table failed or was refused up front.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const char* clause, const std::string& what) {
  if (!cond) throw PreconditionError(clause, what);
}

}  // namespace secmin
