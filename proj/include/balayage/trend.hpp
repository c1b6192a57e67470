#pragma once

#include <vector>

namespace balayage {

inline constexpr double kDivergenceSlope = 0.1;

struct TrendReport {
  std::vector<double> radii;
  std::vector<double> values;
  double slope = 0.0;  // least-squares slope of values against log r over the fit window
  bool divergent = false;
};

// Least-squares slope of y against log x.
double log_slope(const std::vector<double>& x, const std::vector<double>& y);

// Slope over the last two decades of the radius range (or all of it when shorter).
TrendReport log_trend(std::vector<double> radii, std::vector<double> values,
                      double threshold = kDivergenceSlope);

// r_lo * 2^(i / per_octave) up to r_hi inclusive.
std::vector<double> dyadic_grid(double r_lo, double r_hi, int per_octave = 1);

double median(std::vector<double> v);

}  // namespace balayage
