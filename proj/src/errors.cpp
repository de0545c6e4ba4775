#include "lbeval/errors.hpp"

namespace lbeval {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::BadBasis: return "BadBasis";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::ZeroModulus: return "ZeroModulus";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DuplicatePosition: return "DuplicatePosition";
    case Errc::InconsistentSymbols: return "InconsistentSymbols";
    case Errc::NotAScheme: return "NotAScheme";
    case Errc::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case Errc::BadTripleShape: return "BadTripleShape";
    case Errc::NotGood: return "NotGood";
    case Errc::SupportOutOfWindow: return "SupportOutOfWindow";
    case Errc::InsufficientFreedom: return "InsufficientFreedom";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::ParamConstraintViolated: return "ParamConstraintViolated";
    case Errc::TooManyErasures: return "TooManyErasures";
    case Errc::MissingResponse: return "MissingResponse";
    case Errc::DegenerateArgument: return "DegenerateArgument";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InsufficientSurvivors: return "InsufficientSurvivors";
    case Errc::CoefficientNotInBase: return "CoefficientNotInBase";
    case Errc::NotSystematic: return "NotSystematic";
    case Errc::FailedNodeRead: return "FailedNodeRead";
    case Errc::ParseError: return "ParseError";
    case Errc::ConstraintError: return "ConstraintError";
  }
  return "UnknownError";
}

}  // namespace lbeval
