#pragma once

#include <stdexcept>
#include <string>

namespace wcx {

/// Malformed or out-of-range input: bad signature, non-dominant weight,
/// length mismatch, unknown configuration key in strict mode.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Chevalley-Eilenberg oracle refuses inputs above its size caps.
class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symbolic factor was asked for its numeric value but none was configured.
class MissingSubstitution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (e.g. the oracle produced a
/// non-effective character). Never expected; surfaced rather than hidden.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wcx
