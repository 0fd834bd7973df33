#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace incalg {

/// Domain failures. The CLI maps every code to exit status 2.
enum class ErrorCode {
  IndexOutOfRange,
  TooLarge,
  NotUnit,
  NotSingletonClass,
  Mismatch,
  NotInM,
  NotInvertible,
  CocycleViolation,
  NotCentralUnit,
  NotCentral,
  MissingEdge,
  NotASemipath,
  Disconnected,
  NotAutomorphism,
  ShapeMismatch,
  NotClassPreserving,
  NotMultiplicativeResidue,
  NotCommutative,
  CenterNotField,
  NotAField,
  NotAPoset,
  GammaNonzero,
  IntervalTooLarge,
  NotAPartition,
  RepresentativeDisagreement,
  NotConstantOnTypes,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Malformed input (bad JSON, unknown ring spec, unparsable literal). Exit status 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace incalg
