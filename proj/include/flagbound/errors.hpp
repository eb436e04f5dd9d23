#pragma once

#include <stdexcept>
#include <string>

namespace flagbound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments, malformed profiles, inconsistent input bundles.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input data that is well-formed but geometrically impossible
/// (negative sectional genus, deficiencies below zero).
class InconsistentDataError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A guarded operation was called outside the numerical range where its
/// conclusion is asserted.
class HypothesisFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A closed form disagreed with its brute-force oracle. Never expected.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

/// A remainder estimate escaped its stated envelope.
class EnvelopeViolation : public Error {
 public:
  using Error::Error;
};

/// A radical comparison could not be decided within the configured budget.
class UndecidedComparison : public Error {
 public:
  using Error::Error;
};

}  // namespace flagbound
