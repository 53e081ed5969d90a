#pragma once

#include <stdexcept>
#include <string>

namespace walsh {

// Bad argument to a primitive (index out of range, resolution mismatch, p <= 0).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Walsh polynomial of the requested degree does not fit the resolution.
class DegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Q_n == 0, so the Nörlund normalizer is undefined.
class DegenerateWeightsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A mathematical hypothesis required by an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested resolution exceeds the configured memory cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration text or command-line selection.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace walsh
