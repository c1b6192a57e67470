#pragma once

#include <stdexcept>
#include <string>

namespace balayage {

enum class ErrorCode {
  InvalidArgument,
  ZeroPoint,
  NotInUpperHalfPlane,
  EndpointSingularity,
  QuadratureFailure,
  HypothesisViolated,
  BadGauge,
  SupportOffAxis,
  SupportTouchesInterval,
  CoincidentPoints,
  ZeroCenter,
  Singularity,
  AtomOnCircle,
  TailTooLarge,
  SingularityUnresolved,
};

const char* to_string(ErrorCode code);

// Numeric failures are distinguished from bad input (CLI exit code 3 vs 2).
bool is_numeric_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace balayage
