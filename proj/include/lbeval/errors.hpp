#pragma once

#include <stdexcept>
#include <string>

namespace lbeval {

enum class Errc {
  NotPrimePower,
  FieldTooLarge,
  ReducibleModulus,
  BadBasis,
  DuplicatePoint,
  ZeroModulus,
  LengthMismatch,
  DuplicatePosition,
  InconsistentSymbols,
  NotAScheme,
  TooLargeForExhaustive,
  BadTripleShape,
  NotGood,
  SupportOutOfWindow,
  InsufficientFreedom,
  DimensionTooLarge,
  ParamConstraintViolated,
  TooManyErasures,
  MissingResponse,
  DegenerateArgument,
  NotApplicable,
  InsufficientSurvivors,
  CoefficientNotInBase,
  NotSystematic,
  FailedNodeRead,
  ParseError,
  ConstraintError,
};

const char* errc_name(Errc c);

/// Library-wide exception; carries a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) {
  throw Error(c, what);
}

}  // namespace lbeval
