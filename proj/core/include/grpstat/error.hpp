#pragma once

#include <stdexcept>
#include <string>

namespace grpstat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumerating constructor would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (group files, catalog filters, field elements).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace grpstat
