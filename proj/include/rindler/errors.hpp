#pragma once

#include <stdexcept>
#include <string>

namespace rindler {

// Physical input outside the domain of a formula (negative acceleration,
// non-positive separation, light-cone singularity, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Evaluation hit a light-cone pole closer than the configured floor.
class SingularityError : public DomainError {
public:
  using DomainError::DomainError;
};

// Operation called with the wrong kind of input (scalar scenario passed to
// an EM routine, unsupported moment order, malformed CLI flag, ...).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class QuadratureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The one-time normalization of an oracle could not be pinned consistently.
class CalibrationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace rindler
