#include "rtnn/error.hpp"

namespace rtnn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::RankTooLarge: return "rank_too_large";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::NotComparable: return "not_comparable";
    case ErrorCode::NoDescentPair: return "no_descent_pair";
    case ErrorCode::ShapeMismatch: return "shape_mismatch";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::NotInBigCell: return "not_in_big_cell";
    case ErrorCode::LengthNotAdditive: return "length_not_additive";
    case ErrorCode::WrongCell: return "wrong_cell";
    case ErrorCode::WrongStratum: return "wrong_stratum";
    case ErrorCode::ParamCountMismatch: return "param_count_mismatch";
    case ErrorCode::ZeroParameter: return "zero_parameter";
    case ErrorCode::NotInChartImage: return "not_in_chart_image";
    case ErrorCode::InternalInconsistency: return "internal_inconsistency";
    case ErrorCode::NotTNN: return "not_tnn";
    case ErrorCode::ParseError: return "parse_error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace rtnn
