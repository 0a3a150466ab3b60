#pragma once

#include <stdexcept>
#include <string>

namespace presspose {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptySequenceError : public Error {
 public:
  EmptySequenceError() : Error("empty sequence") {}
};

class SequenceTooShortError : public Error {
 public:
  using Error::Error;
};

class UnknownColormapError : public Error {
 public:
  explicit UnknownColormapError(const std::string& name)
      : Error("unknown colormap: " + name) {}
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NoSeedAnnotationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class WeightSchemaError : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

class ReferenceUnavailableError : public Error {
 public:
  using Error::Error;
};

}  // namespace presspose
