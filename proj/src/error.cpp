#include "logsplit/error.hpp"

namespace logsplit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::RootFindingDivergence: return "RootFindingDivergence";
    case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::OutOfBranch: return "OutOfBranch";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::ProductNotIdentity: return "ProductNotIdentity";
    case ErrorCode::ClosureDefect: return "ClosureDefect";
    case ErrorCode::NonIntegralChernClass: return "NonIntegralChernClass";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace logsplit
