#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logsplit {

/// Stable identifiers for every failure the library can report.
enum class ErrorCode {
  DimensionMismatch,
  SingularMatrix,
  RootFindingDivergence,
  ZeroEigenvalue,
  ZeroArgument,
  OutOfBranch,
  InvalidRepresentation,
  ProductNotIdentity,
  ClosureDefect,
  NonIntegralChernClass,
  InternalInconsistency,
  UnsupportedCase,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace logsplit
