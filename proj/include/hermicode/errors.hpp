#pragma once

#include <stdexcept>
#include <string>

namespace hermicode {

/// Invalid tower parameters or run configuration (CLI exit 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// An argument violates an operation precondition (wrong subfield,
/// dimension mismatch, singular change of basis, ...).
struct ArgumentError : std::runtime_error {
  explicit ArgumentError(const std::string& what) : std::runtime_error(what) {}
};

/// Multiplicative inversion of zero.
struct ZeroDivide : std::runtime_error {
  explicit ZeroDivide(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed the configured budget (CLI exit 3).
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An exact identity that must hold by theorem failed to hold (CLI exit 1).
struct CheckFailed : std::runtime_error {
  explicit CheckFailed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hermicode
