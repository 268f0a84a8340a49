#pragma once

#include <stdexcept>
#include <string>

namespace masa {

/// Base of every error raised by the library. The CLI maps the concrete
/// kinds onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation
/// (element out of range, level mismatch, empty input set).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested object exceeds a configured size limit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Operation invoked in a state where it is not defined
/// (stepping a configuration that is already in the final state).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The simulated machine did something undefined, e.g. moved its head left
/// from cell 1.
class MachineFault : public Error {
 public:
  using Error::Error;
};

/// A machine did not halt within its step budget where halting is required.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed machine definition file.
class LoadError : public Error {
 public:
  using Error::Error;
};

}  // namespace masa
