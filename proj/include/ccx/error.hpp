#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccx {

enum class ErrorCode {
  RankViolation,
  DuplicateCell,
  EmptyCell,
  OutOfRangeNode,
  UnknownCell,
  WrongKind,
  ParseError,
  PeriodTooSmall,
  BadParams,
  DegenerateCover,
  NotDivisible,
  DimensionMismatch,
  EmptySkeleton,
  CellWithoutFaces,
  NotAChainComplex,
  DimensionTooLow,
  RankOutOfRange,
  PoolWithoutScl,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports is an Error carrying one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ccx
