#pragma once

#include <stdexcept>
#include <string>

namespace macneille {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two distinct elements are mutually below each other after closure.
class CycleError : public Error {
 public:
  using Error::Error;
};

class UnknownElementError : public Error {
 public:
  using Error::Error;
};

/// The poset has a global minimum or maximum and extrema were not allowed.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NotASubsetError : public Error {
 public:
  using Error::Error;
};

class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Cuts from different base posets were combined.
class MixedBaseError : public Error {
 public:
  using Error::Error;
};

class InvalidSelectorError : public Error {
 public:
  using Error::Error;
};

class GenerationExhaustedError : public Error {
 public:
  using Error::Error;
};

class UnknownCheckError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or a field of the wrong shape. The message carries the
/// line number or the JSON pointer of the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document that breaks a semantic invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace macneille
