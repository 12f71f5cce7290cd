#pragma once

#include <stdexcept>
#include <string>

namespace frob {

// Result of an exact operation does not fit the integer representation.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// mod_inverse called on a value sharing a factor with the modulus.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bad user input or a violated operation precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A derived invariant failed. Always an implementation bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The X-set lacks the index structure the closed form for the mu > floor(r/u)
// case relies on (no valid w, or the minimum sits at index 0).
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force table would exceed the configured entry cap.
class MemoryCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace frob
