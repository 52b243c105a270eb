#include "lvt/exact/error.hpp"

namespace lvt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByIntervalContainingZero: return "DivisionByIntervalContainingZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::IrreducibilityUndecided: return "IrreducibilityUndecided";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::EqualNumbers: return "EqualNumbers";
    case ErrorCode::RelationNotSatisfied: return "RelationNotSatisfied";
    case ErrorCode::DegreeInYTooSmall: return "DegreeInYTooSmall";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::RefinementBudgetExceeded: return "RefinementBudgetExceeded";
    case ErrorCode::TooFewEntries: return "TooFewEntries";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ConstantMap: return "ConstantMap";
    case ErrorCode::PoleAtAlpha: return "PoleAtAlpha";
    case ErrorCode::PoleInInterval: return "PoleInInterval";
    case ErrorCode::DegreeNotBelowM: return "DegreeNotBelowM";
    case ErrorCode::EmptyRecords: return "EmptyRecords";
    case ErrorCode::ComparisonUndecided: return "ComparisonUndecided";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace lvt
