#pragma once

#include <stdexcept>
#include <string>

namespace grprod {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unknown vertex, bad label spec, parse failure.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Element arithmetic was requested under a label that does not support it.
class UnsupportedLabelError : public Error {
 public:
  using Error::Error;
};

/// Two values built over different presentations were combined.
class PresentationMismatchError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would be unbounded or exceed a hard size cap.
class EnumerationError : public Error {
 public:
  using Error::Error;
};

/// A label relation could not be decided from the built-ins and the supplied table.
class RelationTableError : public Error {
 public:
  using Error::Error;
};

}  // namespace grprod
