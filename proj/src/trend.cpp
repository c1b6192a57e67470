#include "balayage/trend.hpp"

#include <algorithm>
#include <cmath>

#include "balayage/errors.hpp"

namespace balayage {

double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return 0.0;
  double mx = 0, my = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (y[i] - my);
    sxx += dx * dx;
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

TrendReport log_trend(std::vector<double> radii, std::vector<double> values, double threshold) {
  if (radii.size() != values.size()) fail(ErrorCode::InvalidArgument, "trend needs matching radii and values");
  TrendReport t;
  t.radii = std::move(radii);
  t.values = std::move(values);
  if (t.radii.size() < 2) return t;
  const double top = t.radii.back();
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.radii.size(); ++i)
    if (t.radii[i] >= top / 100.0) {
      x.push_back(t.radii[i]);
      y.push_back(t.values[i]);
    }
  t.slope = log_slope(x, y);
  t.divergent = std::abs(t.slope) > threshold;
  return t;
}

std::vector<double> dyadic_grid(double r_lo, double r_hi, int per_octave) {
  if (!(r_lo > 0) || !(r_lo <= r_hi) || per_octave < 1)
    fail(ErrorCode::InvalidArgument, "dyadic grid needs 0 < r_lo <= r_hi");
  std::vector<double> g;
  for (int i = 0;; ++i) {
    const double r = r_lo * std::exp2(static_cast<double>(i) / per_octave);
    if (r > r_hi * (1 + 1e-12)) break;
    g.push_back(r);
  }
  return g;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace balayage
