#pragma once

#include <stdexcept>
#include <string>

namespace layered {

/// Argument outside the mathematical domain of a closure or formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid configuration value, unknown key or malformed config line.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state with rho <= 0, rho_theta <= 0 or non-finite components was
/// produced while advancing the solution. Recoverable by the step controller.
class AdmissibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The step controller exhausted its retries.
class StepRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace layered
