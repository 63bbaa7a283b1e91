#pragma once

#include <stdexcept>
#include <string>

namespace corona {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point outside the closed unit disk, or a pole where none is allowed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact division (by a polynomial, z^m, or a Blaschke product) left a remainder.
class NonDivisibleError : public Error {
 public:
  using Error::Error;
};

/// The root-location test could not decide whether a denominator is admissible.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// A function has no constant coefficient at some level of its B-adic expansion.
class NotExpandableError : public Error {
 public:
  using Error::Error;
};

/// A function is not a function of z^d.
class NotReducibleError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// K does not define an algebra, or an operation requires m not in K.
class InvalidKError : public Error {
 public:
  using Error::Error;
};

/// The target is not in the ideal generated by F over the disk algebra model.
class NotInIdealError : public Error {
 public:
  using Error::Error;
};

/// Data violates a hypothesis the requested construction depends on.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// F vanishes where the requested solver needs it not to (F(0) = 0, F_0 = 0).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Neither K - m is an algebra nor m > k_p: no known construction applies.
class NeitherCaseError : public Error {
 public:
  using Error::Error;
};

/// Instance data that parses but violates its declared structure
/// (F or h outside the algebra, a base solution that does not solve the problem).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or command-line data.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace corona
