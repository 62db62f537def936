#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pforge {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. Carries the byte offset of the offending
/// token and a hint describing what was expected there.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset, std::string expected)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// An identifier outside the closed grammar (not `x`, a constant, or a
/// known function name).
class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(const std::string& what, std::size_t offset, std::string name)
      : Error(what), offset_(offset), name_(std::move(name)) {}

  std::size_t offset() const { return offset_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

/// Evaluation left the reals (log of a non-positive value, division by
/// zero, overflow to infinity, ...). Carries the point of evaluation.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double at) : Error(what), at_(at) {}

  double at() const { return at_; }

 private:
  double at_;
};

/// Interval endpoints are not finite or not ordered a < b.
class InvalidInterval : public Error {
 public:
  using Error::Error;
};

/// Partition level outside the permitted range.
class LevelOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Point lies outside the interval a piecewise function is defined on.
class OutOfDomain : public Error {
 public:
  OutOfDomain(const std::string& what, double at) : Error(what), at_(at) {}

  double at() const { return at_; }

 private:
  double at_;
};

}  // namespace pforge
