#pragma once

#include <stdexcept>
#include <string>

namespace h2a {

// Malformed or inconsistent user input (bad manifest, invalid morphism data,
// unsatisfied precondition of an operation). CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested exhaustive computation exceeds the configured size cap, or an
// operation is unavailable for the given ring. CLI exit code 3.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant: a bug, never a user error.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require_input(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

inline void require_internal(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace h2a
