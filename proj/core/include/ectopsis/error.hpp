#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ectopsis {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed, unreadable or structurally invalid input (files, flags,
/// dimensions). The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input that is well-formed but on which a method is undefined, e.g. a
/// constant column under min-max normalization. The CLI maps these to exit
/// code 1.
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Carries the complete list of invariant violations found in a problem.
class ValidationError : public InputError {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace ectopsis
