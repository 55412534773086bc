#pragma once

#include <stdexcept>
#include <string>

namespace kgraph {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance document (bad JSON, wrong field types).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid skeleton: dangling reference, duplicate id, color out of range.
class InvalidSkeleton : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (non-composable paths, m not <= d, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested mode cannot be honoured, e.g. exact enumeration on a cyclic skeleton.
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

}  // namespace kgraph
