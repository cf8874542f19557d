#pragma once

#include <stdexcept>
#include <string>

namespace cntube {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Group element and tube point built from different chiralities.
class ChiralityMismatch : public Error {
public:
  using Error::Error;
};

// Symmetry-group machinery requested for an armchair or zig-zag tube.
class NotChiral : public Error {
public:
  using Error::Error;
};

// k does not satisfy <k,c> in 2piZ.
class OffAllowedLine : public Error {
public:
  using Error::Error;
};

// A representation-theoretic precondition failed (k in Lambda, reducible input, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Clebsch-Gordan precondition failure. `which` names the offending vector:
// "k", "k'", "k+" or "k-".
class CgPreconditionError : public PreconditionError {
public:
  CgPreconditionError(std::string which, const std::string& what)
      : PreconditionError(what), which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

private:
  std::string which_;
};

} // namespace cntube
