#pragma once

#include <stdexcept>

namespace classeq {

/// Base type for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A raw multiplication table fails one of the group axioms.
struct NotAGroupError : Error {
  using Error::Error;
};

/// A closure grew past the configured element cap.
struct ClosureCapExceededError : Error {
  using Error::Error;
};

/// An argument that must be prime is not.
struct NotPrimeError : Error {
  using Error::Error;
};

/// A subgroup that must be normal in its parent is not.
struct NotNormalError : Error {
  using Error::Error;
};

/// The trivial group has no nontrivial conjugacy class, so m(G) is undefined.
struct DegenerateGroupError : Error {
  using Error::Error;
};

/// A term count lies beyond the configured enumeration cap.
struct CapExceededError : Error {
  using Error::Error;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : Error {
  using Error::Error;
};

/// A group file could not be parsed.
struct FileParseError : Error {
  using Error::Error;
};

/// A malformed or out-of-range construction parameter.
struct BadParameterError : Error {
  using Error::Error;
};

/// Exact integer arithmetic left the 64-bit range.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace classeq
