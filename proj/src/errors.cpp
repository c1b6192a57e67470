#include "balayage/errors.hpp"

namespace balayage {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::NotInUpperHalfPlane: return "NotInUpperHalfPlane";
    case ErrorCode::EndpointSingularity: return "EndpointSingularity";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BadGauge: return "BadGauge";
    case ErrorCode::SupportOffAxis: return "SupportOffAxis";
    case ErrorCode::SupportTouchesInterval: return "SupportTouchesInterval";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ZeroCenter: return "ZeroCenter";
    case ErrorCode::Singularity: return "Singularity";
    case ErrorCode::AtomOnCircle: return "AtomOnCircle";
    case ErrorCode::TailTooLarge: return "TailTooLarge";
    case ErrorCode::SingularityUnresolved: return "SingularityUnresolved";
  }
  return "Unknown";
}

bool is_numeric_failure(ErrorCode code) {
  return code == ErrorCode::QuadratureFailure || code == ErrorCode::TailTooLarge ||
         code == ErrorCode::SingularityUnresolved;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace balayage
