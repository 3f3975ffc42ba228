#pragma once

#include <stdexcept>
#include <string>

namespace positroid {

/// Base class for every error thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (.led or JSON diagram).
struct parse_error : error {
  using error::error;
};

/// Structurally valid input that violates a precondition of the
/// requested operation (wrong label kind, not a flat, not simple, ...).
struct domain_error : error {
  using error::error;
};

/// The library promised something it could not deliver: either an internal
/// bug or a genuine counterexample to a guarantee the construction relies
/// on. Callers should treat this as fatal and surface the full message.
struct guarantee_violation : error {
  using error::error;
};

}  // namespace positroid
