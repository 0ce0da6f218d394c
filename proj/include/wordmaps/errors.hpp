#pragma once

#include <stdexcept>
#include <string>

namespace wordmaps {

/// The operation does not apply to this input (wrong derived level, wrong
/// number of generators, ...). The CLI maps it to exit code 2.
class InapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact or numeric self-check failed. The CLI maps it to exit code 3.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wordmaps
