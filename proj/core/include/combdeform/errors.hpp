#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace combdeform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad file, simplex not in complex, ...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured size cap was exceeded.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// An invariant that a construction guarantees did not hold; indicates a bug
/// or a genuine counterexample, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace combdeform
