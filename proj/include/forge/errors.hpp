#pragma once

#include <stdexcept>
#include <string>

namespace forge {

/// Base of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ColourMismatch : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A composition or action whose result lies outside the materialized part of
/// a truncated structure.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed workbench file.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A construction that would have infinitely many elements in finite sets.
class UnboundedSupport : public Error {
 public:
  using Error::Error;
};

}  // namespace forge
