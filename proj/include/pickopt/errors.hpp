#pragma once

#include <stdexcept>
#include <string>

namespace pickopt {

// Malformed input, schema violations, incompatible option combinations.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact method refused because the instance exceeds its documented size bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A walk or batching could not be mapped into a formulation's variable space.
class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pickopt
