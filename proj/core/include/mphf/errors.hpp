#pragma once

#include <stdexcept>
#include <string>

namespace mphf {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or binary data (DIMACS, key files, containers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (open, read, write).
class IoError : public Error {
 public:
  using Error::Error;
};

/// A build exhausted its retry budget or hit an unrecoverable state
/// (UNSAT after all reseeds, singular filter systems, solver timeout).
class BuildError : public Error {
 public:
  using Error::Error;
};

/// External solver misbehaved: crashed without a status line or returned
/// a model that does not satisfy the formula.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace mphf
