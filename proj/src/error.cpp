#include "ccx/error.hpp"

namespace ccx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankViolation: return "RankViolation";
    case ErrorCode::DuplicateCell: return "DuplicateCell";
    case ErrorCode::EmptyCell: return "EmptyCell";
    case ErrorCode::OutOfRangeNode: return "OutOfRangeNode";
    case ErrorCode::UnknownCell: return "UnknownCell";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PeriodTooSmall: return "PeriodTooSmall";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DegenerateCover: return "DegenerateCover";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptySkeleton: return "EmptySkeleton";
    case ErrorCode::CellWithoutFaces: return "CellWithoutFaces";
    case ErrorCode::NotAChainComplex: return "NotAChainComplex";
    case ErrorCode::DimensionTooLow: return "DimensionTooLow";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::PoolWithoutScl: return "PoolWithoutScl";
  }
  return "Unknown";
}

}  // namespace ccx
