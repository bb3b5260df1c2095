#pragma once

#include <stdexcept>
#include <string>

namespace schur {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: non-prime characteristic, non-partition, bad ideal...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

// A ring or group exceeds the configured size gate.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when a check that is guaranteed by a theorem fails on an input that
// satisfies the theorem's hypotheses. Always an implementation bug.
class Falsification : public Error {
 public:
  using Error::Error;
};

}  // namespace schur
