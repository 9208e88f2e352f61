#pragma once

#include <stdexcept>
#include <string>

namespace jetinv {

// Malformed or out-of-range parameters supplied by a caller.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured size ceiling.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold exactly was found to fail.
class ViolatedExpectation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jetinv
