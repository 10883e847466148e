#pragma once

#include <stdexcept>
#include <string>

namespace symtree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad file contents, unknown names,
/// violated preconditions. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A map that was required to be a symbolic ultrametric is not one.
class NotUltrametricError : public Error {
 public:
  using Error::Error;
};

/// A tree handed to a graph-level routine does not represent that graph.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace symtree
