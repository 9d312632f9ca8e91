#pragma once

#include <stdexcept>
#include <string>

namespace genscale {

// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A function was called outside its stated domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// mod_inverse on a residue that is not coprime with the modulus.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

// is_totient_number: a witness exists beyond the caller's search bound.
class BoundTooSmallError : public Error {
 public:
  using Error::Error;
};

// Malformed scale or rational text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Generation analysis has no meaning for the empty scale.
class EmptyScaleError : public Error {
 public:
  using Error::Error;
};

// An operation was asked to run outside its theorem hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// chopin_check needs at least two notes on each side.
class TrivialScaleError : public Error {
 public:
  using Error::Error;
};

// An exhaustive subset sweep would exceed the enforced size bound.
class SweepTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace genscale
