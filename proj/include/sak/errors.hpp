#pragma once

#include <stdexcept>
#include <string>

namespace sak {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConflictingSign : InputError {
  using InputError::InputError;
};

struct SelfLoop : InputError {
  using InputError::InputError;
};

struct EmptySet : InputError {
  using InputError::InputError;
};

struct EmptyGraph : InputError {
  using InputError::InputError;
};

// A solver produced something that does not re-verify; always a bug.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace sak
