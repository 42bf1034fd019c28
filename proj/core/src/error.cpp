#include "bigpoly/error.hpp"

namespace bigpoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kCharZero: return "CharZero";
    case ErrorKind::kNotAPthPower: return "NotAPthPower";
    case ErrorKind::kNotApplicable: return "NotApplicable";
    case ErrorKind::kInvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kRingMismatch: return "RingMismatch";
    case ErrorKind::kNotHomogeneous: return "NotHomogeneous";
    case ErrorKind::kZeroInput: return "ZeroInput";
    case ErrorKind::kFieldTooSmall: return "FieldTooSmall";
    case ErrorKind::kUnsupportedField: return "UnsupportedField";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kDegreeTooLow: return "DegreeTooLow";
    case ErrorKind::kCharTwo: return "CharTwo";
    case ErrorKind::kNotQuadric: return "NotQuadric";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kUnitIdeal: return "UnitIdeal";
    case ErrorKind::kCharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorKind::kGenericNotRegular: return "GenericNotRegular";
    case ErrorKind::kNotFound: return "NotFound";
    case ErrorKind::kMaxIterations: return "MaxIterations";
    case ErrorKind::kInvariantViolated: return "InvariantViolated";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bigpoly
