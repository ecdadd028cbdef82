#pragma once

#include <stdexcept>
#include <string>

namespace overrank {

/// Caller violated an operation's precondition (bad modulus, out-of-range n,
/// non-coprime pair, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold did not (e.g. a non-integral
/// orthogonality result). Always indicates a bug or corrupted input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed serialized data.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}
}  // namespace detail

}  // namespace overrank
