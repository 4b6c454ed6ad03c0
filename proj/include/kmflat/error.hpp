#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kmflat {

enum class ErrorCode {
  NotSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroPatternAsymmetric,
  NotSymmetrizable,
  DegenerateForm,
  IndexOutOfRange,
  DimensionMismatch,
  ZeroVector,
  NonFinite,
  BaseMismatch,
  NotPositiveDefinite,
  SingularMatrix,
  NotConformal,
  RankTooLarge,
  NumericallySingular,
  NotUnimodular,
  FieldMismatch,
  PointOnBoundary,
  OrderOverflow,
  NotSpherical,
  EmptyFace,
  PointNotInFace,
  NotArrangementPreserving,
  CellLimitExceeded,
  FileNotFound,
  MalformedJson,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every kmflat operation. `indices` carries the
/// 1-based positions (matrix entry, cycle, root index, ...) the error names.
class KmError : public std::runtime_error {
 public:
  KmError(ErrorCode code, const std::string& message, std::vector<std::size_t> indices = {})
      : std::runtime_error(message), code_(code), indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace kmflat
