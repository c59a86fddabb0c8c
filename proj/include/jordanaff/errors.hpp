#pragma once

#include <stdexcept>
#include <string>

namespace jordanaff {

enum class ErrorKind {
  kDimensionMismatch,
  kSignatureMismatch,
  kNotInvertible,
  kNotSemisimple,
  kNotUnital,
  kInvalidFamily,
  kNotInSubspace,
  kInvalidArgument,
  kConstraintViolated,
  kSchema,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// kind() lets callers branch without parsing the message.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jordanaff
