#pragma once

#include <stdexcept>
#include <string>

namespace hut {

// Operand dimensions disagree.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A parameter is outside its documented domain (e.g. delta <= 0).
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A distance was requested for an empty set.
struct UndefinedDistance : std::domain_error {
  using std::domain_error::domain_error;
};

// The requested (variant, dimension, algorithm) route does not exist.
struct Unsupported : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed text or instance file.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A brute-force enumeration would exceed its configured cap.
struct SizeGuardExceeded : std::length_error {
  using std::length_error::length_error;
};

}  // namespace hut
