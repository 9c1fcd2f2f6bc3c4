#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rtnn {

enum class ErrorCode {
  RankMismatch,
  RankTooLarge,
  IndexOutOfRange,
  NotComparable,
  NoDescentPair,
  ShapeMismatch,
  Singular,
  NotInBigCell,
  LengthNotAdditive,
  WrongCell,
  WrongStratum,
  ParamCountMismatch,
  ZeroParameter,
  NotInChartImage,
  InternalInconsistency,
  NotTNN,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rtnn
