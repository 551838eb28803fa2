#pragma once

#include <stdexcept>
#include <string>

namespace plaw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

/// A dimension or k outside its admissible range.
class InvalidRange : public Error {
 public:
  using Error::Error;
};

/// A label that is malformed or refers to generators that do not exist.
class LabelOutOfRange : public Error {
 public:
  using Error::Error;
};

class DegenerateGenerators : public Error {
 public:
  using Error::Error;
};

class ExhaustedRetries : public Error {
 public:
  using Error::Error;
};

/// Unparseable scalar text or malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace plaw
