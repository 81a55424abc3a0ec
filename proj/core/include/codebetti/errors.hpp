#pragma once

#include <stdexcept>
#include <string>

namespace codebetti {

// Every failure in the library throws Error with a machine-checkable kind.
// All arithmetic is exact; there is no "tolerance" anywhere, so the only
// runtime failures are contract violations, oversized inputs, and parse errors.
enum class ErrorKind {
    NotAPrimePower,     // field order is not p^m
    TooLarge,           // input exceeds a hard size cap (field order, code length, ...)
    DivisionByZero,     // inverse of zero requested
    FieldMismatch,      // operands belong to fields of different order
    ValueOutOfField,    // raw value >= q
    DimensionMismatch,  // ragged rows / incompatible matrix shapes
    IndexOutOfRange,    // row, column, or ground-set element out of range
    DimOutOfRange,      // requested subobject dimension outside 0..k
    ZeroDimensionalCode,// operation undefined for k = 0
    EnumerationTooLarge,// enumeration would exceed the configured cap
    GroundSetTooLarge,  // matroid ground set exceeds the configured cap
    FreeMatroid,        // weights undefined: no dependent sets
    NonIntegralHierarchy,// predicted weight is not an integer
    NonIntegralDegree,  // predicted twist is not an integer
    ImpureTable,        // operation needs a pure (one twist per degree) table
    OutOfRange,         // arithmetic result does not fit the result type
    ParseError,         // malformed code file or report input
    Precondition,       // other violated call contract
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

} // namespace codebetti
