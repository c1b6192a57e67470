#include "balayage/extended_real.hpp"

#include <cmath>
#include <sstream>

#include "balayage/errors.hpp"

namespace balayage {

ExtendedReal::ExtendedReal(double value) : value_(value) {
  if (!std::isfinite(value)) fail(ErrorCode::InvalidArgument, "extended real from non-finite double");
}

ExtendedReal ExtendedReal::bottom() {
  ExtendedReal r;
  r.bottom_ = true;
  return r;
}

double ExtendedReal::value() const {
  if (bottom_) fail(ErrorCode::Singularity, "value of -inf requested");
  return value_;
}

ExtendedReal ExtendedReal::operator+(const ExtendedReal& other) const {
  if (bottom_ || other.bottom_) return bottom();
  return ExtendedReal(value_ + other.value_);
}

ExtendedReal ExtendedReal::operator-(double other) const {
  if (bottom_) return bottom();
  return ExtendedReal(value_ - other);
}

ExtendedReal ExtendedReal::scaled(double c) const {
  if (c < 0) fail(ErrorCode::InvalidArgument, "negative scaling of an extended real");
  if (c == 0) return ExtendedReal(0.0);
  if (bottom_) return bottom();
  return ExtendedReal(c * value_);
}

bool ExtendedReal::operator<(const ExtendedReal& other) const {
  if (bottom_) return !other.bottom_;
  if (other.bottom_) return false;
  return value_ < other.value_;
}

bool ExtendedReal::operator<=(const ExtendedReal& other) const { return !(other < *this); }

bool ExtendedReal::operator==(const ExtendedReal& other) const {
  if (bottom_ || other.bottom_) return bottom_ == other.bottom_;
  return value_ == other.value_;
}

std::string ExtendedReal::to_string() const {
  if (bottom_) return "-inf";
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

}  // namespace balayage
