#pragma once

#include <stdexcept>
#include <string>

namespace subdirect {

// Malformed or inconsistent caller input: bad letters, mismatched alphabets,
// dimension errors, unparsable text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series whose constant term is not 1 was asked for its inverse.
class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An invariant the library guarantees failed to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace subdirect
