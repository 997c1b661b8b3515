#include "padlift/error.hpp"

namespace padlift {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducibleModP: return "NotIrreducibleModP";
    case Errc::NotEisenstein: return "NotEisenstein";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ConstantTermNotSmall: return "ConstantTermNotSmall";
    case Errc::ShiftNotSmall: return "ShiftNotSmall";
    case Errc::PrecisionAmbiguous: return "PrecisionAmbiguous";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NoSmallFixedPoint: return "NoSmallFixedPoint";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotDistinguished: return "NotDistinguished";
    case Errc::NotAUnitTail: return "NotAUnitTail";
    case Errc::LinearCoefficientZero: return "LinearCoefficientZero";
    case Errc::MalformedGroupData: return "MalformedGroupData";
    case Errc::DNotPrime: return "DNotPrime";
    case Errc::BadInput: return "BadInput";
    case Errc::SchemaViolation: return "SchemaViolation";
  }
  return "UnknownError";
}

}  // namespace padlift
