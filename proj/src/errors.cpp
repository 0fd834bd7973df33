#include "incalg/errors.hpp"

namespace incalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotSingletonClass: return "NotSingletonClass";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::NotInM: return "NotInM";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::CocycleViolation: return "CocycleViolation";
    case ErrorCode::NotCentralUnit: return "NotCentralUnit";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::NotASemipath: return "NotASemipath";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotClassPreserving: return "NotClassPreserving";
    case ErrorCode::NotMultiplicativeResidue: return "NotMultiplicativeResidue";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::CenterNotField: return "CenterNotField";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::GammaNonzero: return "GammaNonzero";
    case ErrorCode::IntervalTooLarge: return "IntervalTooLarge";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::RepresentativeDisagreement: return "RepresentativeDisagreement";
    case ErrorCode::NotConstantOnTypes: return "NotConstantOnTypes";
  }
  return "Unknown";
}

}  // namespace incalg
