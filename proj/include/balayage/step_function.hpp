#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace balayage {

// Right-continuous step function on [0, inf): base + sum of jumps h_j at x_j <= x.
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(std::vector<std::pair<double, double>> jumps, double base = 0.0);

  double operator()(double x) const;
  double base() const noexcept { return base_; }
  const std::vector<double>& points() const noexcept { return x_; }
  const std::vector<double>& sizes() const noexcept { return h_; }
  bool empty() const noexcept { return x_.empty(); }
  // Value beyond the last jump.
  double final_value() const noexcept { return base_ + (cum_.empty() ? 0.0 : cum_.back()); }

  // Sum of h_j over lo < x_j <= hi.
  double jump_sum(double lo, double hi) const;
  // Stieltjes integral over (lo, hi] of t^e df(t).
  double stieltjes_power(double e, double lo, double hi) const;
  // Stieltjes integral over (lo, hi] of log t df(t).
  double stieltjes_log(double lo, double hi) const;
  double stieltjes(const std::function<double(double)>& g, double lo, double hi) const;
  // Exact integral of f(t) t^e over [lo, hi], 0 < lo when e <= -1.
  double integral_power(double e, double lo, double hi) const;
  // Same with |f| in place of f.
  double integral_abs_power(double e, double lo, double hi) const;

  StepFunction scaled(double c) const;

 private:
  template <typename F>
  double integrate_pieces(double lo, double hi, F piece) const;

  std::vector<double> x_;
  std::vector<double> h_;
  std::vector<double> cum_;
  double base_ = 0.0;
};

// Nondecreasing (or signed) radial distribution with known discontinuities; step functions and balayage traces both fit.
struct RadialDistribution {
  std::function<double(double)> value;
  std::vector<double> breakpoints;
  // Value for t beyond every breakpoint and the right end of any nontrivial variation, if known.
  double tail_value = 0.0;
  bool constant_tail = false;
  double tail_from = 0.0;
};

RadialDistribution as_distribution(const StepFunction& f);

}  // namespace balayage
