#pragma once

#include <stdexcept>
#include <string>

namespace kollar {

enum class ErrorCode {
  InvalidParameters,
  NotContractible,
  InvalidLocation,
  InvalidChain,
  NotPlt,
  NotLogFano,
  InvalidCoefficient,
  UnsupportedConfiguration,
  UniquenessViolated,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::InvalidLocation: return "InvalidLocation";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::NotPlt: return "NotPlt";
    case ErrorCode::NotLogFano: return "NotLogFano";
    case ErrorCode::InvalidCoefficient: return "InvalidCoefficient";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::UniquenessViolated: return "UniquenessViolated";
  }
  return "Unknown";
}

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define KOLLAR_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
   public:                                                                     \
    explicit Name(const std::string& what) : Error(ErrorCode::Name, what) {}   \
  };

KOLLAR_DEFINE_ERROR(InvalidParameters)
KOLLAR_DEFINE_ERROR(NotContractible)
KOLLAR_DEFINE_ERROR(InvalidLocation)
KOLLAR_DEFINE_ERROR(InvalidChain)
KOLLAR_DEFINE_ERROR(NotLogFano)
KOLLAR_DEFINE_ERROR(InvalidCoefficient)
KOLLAR_DEFINE_ERROR(UnsupportedConfiguration)
KOLLAR_DEFINE_ERROR(UniquenessViolated)

#undef KOLLAR_DEFINE_ERROR

/// Raised when an extraction is not purely log terminal. Carries the offending
/// boundary coefficient so callers can tell log canonical (== 1) from worse.
class NotPlt : public Error {
 public:
  NotPlt(const std::string& what, std::string vertex, bool log_canonical)
      : Error(ErrorCode::NotPlt, what), vertex_(std::move(vertex)), log_canonical_(log_canonical) {}
  const std::string& vertex() const noexcept { return vertex_; }
  /// True when the worst coefficient is exactly 1 (lc but not plt).
  bool log_canonical() const noexcept { return log_canonical_; }

 private:
  std::string vertex_;
  bool log_canonical_;
};

}  // namespace kollar
