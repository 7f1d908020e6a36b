#pragma once

#include <stdexcept>
#include <string>

namespace dcoh {

/// Bad user input: malformed documents, failed validation, ring or degree violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

class DegreeError : public InputError {
 public:
  using InputError::InputError;
};

/// Unknown builtin space, suite, or generator name.
class UnknownResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcoh
