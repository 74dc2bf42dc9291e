#include "dynirr/error.hpp"

namespace dynirr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::InversionOfZero: return "InversionOfZero";
    case ErrorCode::ElementFromWrongField: return "ElementFromWrongField";
    case ErrorCode::ChainTooLong: return "ChainTooLong";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::InternalBoundExceeded: return "InternalBoundExceeded";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::CommonCViolated: return "CommonCViolated";
    case ErrorCode::HIsSquare: return "HIsSquare";
    case ErrorCode::HIsZero: return "HIsZero";
    case ErrorCode::PNotOneModFour: return "PNotOneModFour";
    case ErrorCode::ModulusNotIrreducible: return "ModulusNotIrreducible";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoAdmissibleA: return "NoAdmissibleA";
    case ErrorCode::NoAdmissibleB: return "NoAdmissibleB";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
  }
  return "Unknown";
}

}  // namespace dynirr
