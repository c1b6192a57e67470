#include "balayage/step_function.hpp"

#include <algorithm>
#include <cmath>

#include "balayage/errors.hpp"

namespace balayage {

StepFunction::StepFunction(std::vector<std::pair<double, double>> jumps, double base) : base_(base) {
  std::sort(jumps.begin(), jumps.end());
  for (const auto& [x, h] : jumps) {
    if (!std::isfinite(x) || x < 0 || !std::isfinite(h))
      fail(ErrorCode::InvalidArgument, "step function jumps need finite x >= 0");
    if (h == 0) continue;
    if (!x_.empty() && x_.back() == x) {
      h_.back() += h;
    } else {
      x_.push_back(x);
      h_.push_back(h);
    }
  }
  double s = 0.0;
  cum_.reserve(h_.size());
  for (double h : h_) cum_.push_back(s += h);
}

double StepFunction::operator()(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const auto n = it - x_.begin();
  return base_ + (n == 0 ? 0.0 : cum_[n - 1]);
}

double StepFunction::jump_sum(double lo, double hi) const {
  if (hi <= lo) return 0.0;
  return (*this)(hi) - (*this)(lo);
}

double StepFunction::stieltjes(const std::function<double(double)>& g, double lo, double hi) const {
  double s = 0.0;
  auto it = std::upper_bound(x_.begin(), x_.end(), lo);
  for (; it != x_.end() && *it <= hi; ++it) s += h_[it - x_.begin()] * g(*it);
  return s;
}

double StepFunction::stieltjes_power(double e, double lo, double hi) const {
  return stieltjes([e](double t) { return std::pow(t, e); }, lo, hi);
}

double StepFunction::stieltjes_log(double lo, double hi) const {
  return stieltjes([](double t) { return std::log(t); }, lo, hi);
}

template <typename F>
double StepFunction::integrate_pieces(double lo, double hi, F piece) const {
  if (hi <= lo) return 0.0;
  double s = 0.0;
  double left = lo;
  double value = (*this)(lo);
  auto it = std::upper_bound(x_.begin(), x_.end(), lo);
  for (; it != x_.end() && *it < hi; ++it) {
    s += piece(value, left, *it);
    left = *it;
    value = base_ + cum_[it - x_.begin()];
  }
  return s + piece(value, left, hi);
}

namespace {

// Integral of t^e over [a, b].
double power_integral(double e, double a, double b) {
  if (e == -1.0) return std::log(b / a);
  return (std::pow(b, e + 1) - std::pow(a, e + 1)) / (e + 1);
}

}  // namespace

double StepFunction::integral_power(double e, double lo, double hi) const {
  if (e <= -1 && lo <= 0) fail(ErrorCode::InvalidArgument, "power integral diverges at 0");
  return integrate_pieces(lo, hi, [e](double c, double a, double b) {
    return c == 0 ? 0.0 : c * power_integral(e, a, b);
  });
}

double StepFunction::integral_abs_power(double e, double lo, double hi) const {
  if (e <= -1 && lo <= 0) fail(ErrorCode::InvalidArgument, "power integral diverges at 0");
  return integrate_pieces(lo, hi, [e](double c, double a, double b) {
    return c == 0 ? 0.0 : std::abs(c) * power_integral(e, a, b);
  });
}

StepFunction StepFunction::scaled(double c) const {
  std::vector<std::pair<double, double>> j;
  for (std::size_t i = 0; i < x_.size(); ++i) j.push_back({x_[i], c * h_[i]});
  return StepFunction(std::move(j), c * base_);
}

RadialDistribution as_distribution(const StepFunction& f) {
  RadialDistribution d;
  d.value = [f](double t) { return f(t); };
  d.breakpoints = f.points();
  d.tail_value = f.final_value();
  d.constant_tail = true;
  d.tail_from = f.empty() ? 0.0 : f.points().back();
  return d;
}

}  // namespace balayage
