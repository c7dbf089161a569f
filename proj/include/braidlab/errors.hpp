#pragma once

#include <stdexcept>
#include <string>

namespace braidlab {

// Bad type/rank/field parameters.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration size bounds exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required upstream artifact (e.g. a certificate) is missing.
struct dependency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace braidlab
