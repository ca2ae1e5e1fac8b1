#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polariton {

enum class ErrorCode {
  InvalidArgument,
  InvalidMaterial,
  SingularPoint,
  DegenerateRoots,
  NotRepresentable,
  UnitMismatch,
  DegenerateSpectrum,
  NonPositiveRoot,
  OnResonance,
  ForbiddenBand,
  PoleOnContour,
  ZeroWaveVector,
  DegenerateAmbiguity,
  UnphysicalMode,
  ZeroGroupVelocity,
  CutoffTooSmall,
  UnsupportedDimension,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidMaterial: return "InvalidMaterial";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::DegenerateRoots: return "DegenerateRoots";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::UnitMismatch: return "UnitMismatch";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::NonPositiveRoot: return "NonPositiveRoot";
    case ErrorCode::OnResonance: return "OnResonance";
    case ErrorCode::ForbiddenBand: return "ForbiddenBand";
    case ErrorCode::PoleOnContour: return "PoleOnContour";
    case ErrorCode::ZeroWaveVector: return "ZeroWaveVector";
    case ErrorCode::DegenerateAmbiguity: return "DegenerateAmbiguity";
    case ErrorCode::UnphysicalMode: return "UnphysicalMode";
    case ErrorCode::ZeroGroupVelocity: return "ZeroGroupVelocity";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a machine-readable error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polariton
