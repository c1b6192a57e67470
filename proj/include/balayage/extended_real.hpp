#pragma once

#include <string>

namespace balayage {

// Real line with an explicit bottom element -inf.
// Conventions: bottom + x = bottom, c * bottom = bottom for c > 0, 0 * bottom = 0.
class ExtendedReal {
 public:
  ExtendedReal() = default;
  ExtendedReal(double value);  // NOLINT(implicit): finite values convert freely

  static ExtendedReal bottom();

  bool is_bottom() const noexcept { return bottom_; }
  // Throws Singularity on bottom.
  double value() const;
  double value_or(double fallback) const noexcept { return bottom_ ? fallback : value_; }

  ExtendedReal operator+(const ExtendedReal& other) const;
  ExtendedReal operator-(double other) const;
  ExtendedReal scaled(double c) const;

  bool operator<(const ExtendedReal& other) const;
  bool operator<=(const ExtendedReal& other) const;
  bool operator==(const ExtendedReal& other) const;

  std::string to_string() const;

 private:
  double value_ = 0.0;
  bool bottom_ = false;
};

}  // namespace balayage
