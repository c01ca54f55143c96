#pragma once

#include <stdexcept>
#include <string>

namespace lppkit {

enum class ErrorCode {
  kArgument,
  kParse,
  kDimension,
  kRange,
  kNotArtinian,
  kInvalidVector,
  kInvalidSequence,
  kGuardExceeded,
  kPrecondition,
  kInternal,
};

// Base of every exception the library throws. The code is what the C API
// reports as a status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorCode::kDimension, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorCode::kRange, what) {}
};

class NotArtinianError : public Error {
 public:
  explicit NotArtinianError(const std::string& what)
      : Error(ErrorCode::kNotArtinian, what) {}
};

class InvalidVectorError : public Error {
 public:
  explicit InvalidVectorError(const std::string& what)
      : Error(ErrorCode::kInvalidVector, what) {}
};

class InvalidSequenceError : public Error {
 public:
  explicit InvalidSequenceError(const std::string& what)
      : Error(ErrorCode::kInvalidSequence, what) {}
};

class GuardExceeded : public Error {
 public:
  explicit GuardExceeded(const std::string& what)
      : Error(ErrorCode::kGuardExceeded, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::kPrecondition, what) {}
};

}  // namespace lppkit
