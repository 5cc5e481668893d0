#pragma once

#include <stdexcept>
#include <string>

namespace addpoly {

// Base of every error raised by the library. The CLI maps the three direct
// subclasses onto exit codes 2, 3 and 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input or a violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input_error"; }
};

class NotInSubfield : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "not_in_subfield"; }
};

class NotCentral : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "not_central"; }
};

/// An explicit size cap was hit. Expected outcome, never a bug.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget_exceeded"; }
};

class ExtensionTooLarge : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
  const char* kind() const noexcept override { return "extension_too_large"; }
};

class Overflow : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
  const char* kind() const noexcept override { return "overflow"; }
};

/// A derived quantity contradicts the mathematics; signals a bug upstream.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal_inconsistency"; }
};

class DescentFailure : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
  const char* kind() const noexcept override { return "descent_failure"; }
};

}  // namespace addpoly
