#pragma once

#include <stdexcept>
#include <string>

namespace lme {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAPartition : public Error {
 public:
  using Error::Error;
};

class TooManyRows : public Error {
 public:
  using Error::Error;
};

class NotContained : public Error {
 public:
  using Error::Error;
};

/// A configured cap (diagram count, Hilbert-space dimension, enumeration
/// length) would be exceeded.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedDim : public Error {
 public:
  using Error::Error;
};

class ZeroState : public Error {
 public:
  using Error::Error;
};

class BadArity : public Error {
 public:
  using Error::Error;
};

/// A step of the telescope construction broke one of the five
/// Littlewood-Richardson conditions.
class ConditionViolation : public Error {
 public:
  ConditionViolation(int step, int condition, const std::string& what)
      : Error(what), step_(step), condition_(condition) {}
  int step() const { return step_; }
  int condition() const { return condition_; }

 private:
  int step_;
  int condition_;
};

}  // namespace lme
