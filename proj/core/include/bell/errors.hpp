#ifndef BELL_ERRORS_HPP
#define BELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bell {

/// Base class for every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configuration document failed validation (CLI exit code 2).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// A conditional quantity was requested for a setting pair that was
/// never measured (CLI exit code 3).
class UnmeasuredContextError : public Error {
public:
  UnmeasuredContextError(int a_index, int b_index)
      : Error("no trials recorded for setting pair (" + std::to_string(a_index) +
              "," + std::to_string(b_index) + ")"),
        a_index(a_index),
        b_index(b_index) {}

  int a_index;
  int b_index;
};

/// Division by a zero setting probability in the generalized inequality.
class ZeroProbabilityError : public Error {
public:
  ZeroProbabilityError(int a_index, int b_index)
      : Error("setting probability is zero for pair (" + std::to_string(a_index) +
              "," + std::to_string(b_index) + "); generalized form undefined"),
        a_index(a_index),
        b_index(b_index) {}

  int a_index;
  int b_index;
};

/// A bound was requested outside its domain of validity, e.g. the
/// absolute-correlation bound under non-uniform settings.
class NotApplicableError : public Error {
public:
  using Error::Error;
};

/// Statistics were requested from an accumulator holding no trials.
class EmptyAccumulatorError : public Error {
public:
  EmptyAccumulatorError() : Error("accumulator holds no trials") {}
};

}  // namespace bell

#endif
