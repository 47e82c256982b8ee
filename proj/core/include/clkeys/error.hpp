#pragma once

#include <stdexcept>
#include <string>

namespace clkeys {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: duplicate names, unknown elements,
/// invalid closure systems, out-of-range arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two values bound to different universes were combined.
class UniverseMismatch : public Error {
 public:
  UniverseMismatch() : Error("operands belong to different universes") {}
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured size cap.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t n, std::size_t limit)
      : Error(what + ": universe size " + std::to_string(n) +
              " exceeds enumeration limit " + std::to_string(limit)),
        n_(n),
        limit_(limit) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

/// Internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace clkeys
