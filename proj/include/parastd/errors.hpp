#ifndef PARASTD_ERRORS_HPP
#define PARASTD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace parastd {

/// Stable error codes. The CLI prints `code_name(code)` so consumers can
/// match on them.
enum class ErrorCode {
  DimensionMismatch,
  ZeroPolynomial,
  NonTerminatingOrder,
  DenominatorVanishes,
  DenominatorInQ,
  AllCoefficientsInQ,
  LeadingCoeffNotDividingH,
  QContainsOne,
  TruncationTooSmall,
  SampleOffVariety,
  SampleOnExcludedLocus,
  DepthExceeded,
  NoCell,
  MultipleCells,
  NoStabilization,
  SyntaxError,
  UnknownIdentifier,
  DuplicateSection,
  InvalidArgument,
};

inline std::string_view code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonTerminatingOrder: return "NonTerminatingOrder";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::DenominatorInQ: return "DenominatorInQ";
    case ErrorCode::AllCoefficientsInQ: return "AllCoefficientsInQ";
    case ErrorCode::LeadingCoeffNotDividingH: return "LeadingCoeffNotDividingH";
    case ErrorCode::QContainsOne: return "QContainsOne";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::SampleOffVariety: return "SampleOffVariety";
    case ErrorCode::SampleOnExcludedLocus: return "SampleOnExcludedLocus";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::NoCell: return "NoCell";
    case ErrorCode::MultipleCells: return "MultipleCells";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::DuplicateSection: return "DuplicateSection";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace parastd

#endif  // PARASTD_ERRORS_HPP
