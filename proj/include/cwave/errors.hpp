#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwave {

enum class ErrorCode {
  SingularPoint,
  AmbiguousBranch,
  OnAxis,
  DomainError,
  Divergent,
  NoConvergence,
  ZeroEnergy,
  PulseNode,
  DegenerateGauge,
  StencilClipsSingularSet,
  ConfigError,
  IoError,
  UnknownSuite,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::AmbiguousBranch: return "AmbiguousBranch";
    case ErrorCode::OnAxis: return "OnAxis";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroEnergy: return "ZeroEnergy";
    case ErrorCode::PulseNode: return "PulseNode";
    case ErrorCode::DegenerateGauge: return "DegenerateGauge";
    case ErrorCode::StencilClipsSingularSet: return "StencilClipsSingularSet";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

}  // namespace cwave
