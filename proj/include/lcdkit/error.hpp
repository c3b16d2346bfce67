#pragma once

#include <stdexcept>
#include <string>

namespace lcdkit {

/// Raised when an operation's precondition does not hold for the given input
/// (unknown vertex, wrong dimension, invalid coloring, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an invariant that the library itself is responsible for is
/// broken. Seeing one of these indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lcdkit
