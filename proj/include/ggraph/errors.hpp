#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ggraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at " + std::to_string(position) + ": " + message), position_(position), message_(message) {}
  explicit ParseError(const std::string& message) : Error("parse error: " + message), position_(0), message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// A configured size or node cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A recognition witness does not satisfy the characterisation conditions.
class WitnessInvalid : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& message) {
  if (!cond) throw PreconditionFailed(message);
}

inline void ensure(bool cond, const std::string& message) {
  if (!cond) throw AssertionFailure(message);
}

}  // namespace detail
}  // namespace ggraph
