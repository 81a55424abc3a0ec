#include "codebetti/errors.hpp"

namespace codebetti {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotAPrimePower: return "NotAPrimePower";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ValueOutOfField: return "ValueOutOfField";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimOutOfRange: return "DimOutOfRange";
        case ErrorKind::ZeroDimensionalCode: return "ZeroDimensionalCode";
        case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
        case ErrorKind::FreeMatroid: return "FreeMatroid";
        case ErrorKind::NonIntegralHierarchy: return "NonIntegralHierarchy";
        case ErrorKind::NonIntegralDegree: return "NonIntegralDegree";
        case ErrorKind::ImpureTable: return "ImpureTable";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Precondition: return "Precondition";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

} // namespace codebetti
