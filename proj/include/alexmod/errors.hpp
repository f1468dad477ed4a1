#pragma once

#include <stdexcept>
#include <string>

namespace alexmod {

/// Malformed or inconsistent user input (bad JSON, non-closed cocycle,
/// mismatched variable counts, ...).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A property that the mathematics guarantees was found to fail at runtime.
/// Always a bug, never a user error.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace alexmod
