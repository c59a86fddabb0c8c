#include "jordanaff/errors.hpp"

namespace jordanaff {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "dimension mismatch";
    case ErrorKind::kSignatureMismatch: return "signature mismatch";
    case ErrorKind::kNotInvertible: return "not invertible";
    case ErrorKind::kNotSemisimple: return "not semi-simple";
    case ErrorKind::kNotUnital: return "not unital";
    case ErrorKind::kInvalidFamily: return "invalid family";
    case ErrorKind::kNotInSubspace: return "not in subspace";
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kConstraintViolated: return "constraint violated";
    case ErrorKind::kSchema: return "schema violation";
  }
  return "error";
}

}  // namespace jordanaff
