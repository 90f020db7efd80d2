#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

// Failure classes map one-to-one onto the CLI exit codes.
enum class ErrorKind { input = 2, cap_exceeded = 3, verification = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input or a violated precondition.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

/// An enumeration or size limit would be exceeded.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(ErrorKind::cap_exceeded, what) {}
};

/// A mathematical check failed (as opposed to a problem with the input).
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what) : Error(ErrorKind::verification, what) {}
};

}  // namespace coarse
