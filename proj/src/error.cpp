#include "kmflat/error.hpp"

namespace kmflat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::ZeroPatternAsymmetric: return "ZeroPatternAsymmetric";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotConformal: return "NotConformal";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::NumericallySingular: return "NumericallySingular";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::PointOnBoundary: return "PointOnBoundary";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::EmptyFace: return "EmptyFace";
    case ErrorCode::PointNotInFace: return "PointNotInFace";
    case ErrorCode::NotArrangementPreserving: return "NotArrangementPreserving";
    case ErrorCode::CellLimitExceeded: return "CellLimitExceeded";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace kmflat
