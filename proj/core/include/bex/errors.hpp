#pragma once

#include <stdexcept>
#include <string>

namespace bex {

// Malformed caller input: out-of-range elements, invalid representations,
// violated preconditions that the caller is responsible for.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A brute-force routine was asked to run past its configured size cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// The requested transformation does not exist (incompatible basis pairs).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug or a broken oracle.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

#define BEX_INTERNAL_CHECK(cond, msg)            \
  do {                                           \
    if (!(cond)) throw ::bex::InternalError(msg); \
  } while (0)

}  // namespace bex
