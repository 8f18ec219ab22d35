#pragma once

#include <stdexcept>
#include <string>

namespace flagcert {

// Malformed input: bad files, invalid graphs, precondition violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested size exceeds a documented cost guard.
class CostGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flagcert
