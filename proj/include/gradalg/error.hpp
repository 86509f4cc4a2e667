/**
 * @file gradalg/error.hpp
 * @copyright Apache License 2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace gradalg {

enum class ErrorKind {
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  StructureError,
  NotAPoset,
  NotAGroup,
  WindowError,
  InfiniteSupport,
  TriangularityViolation,
  IdempotentError,
  CharacteristicTooSmall,
  NotUnital,
  InputNotIdempotentModJ,
  NonSplitSemisimpleQuotient,
  OracleTooLarge,
  LiftFailure,
  NotEquivariant,
  NotIdempotentOnInterior,
  SearchSpaceTooLarge,
};

const char* error_kind_name(ErrorKind k);

/// Library-wide exception. The kind names the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gradalg
