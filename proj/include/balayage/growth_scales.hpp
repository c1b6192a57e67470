#pragma once

#include <vector>

#include "balayage/step_function.hpp"
#include "balayage/trend.hpp"

namespace balayage {

inline constexpr double kOrderCap = 64.0;

// Estimators over a finite window: the sup is taken over the upper half [sqrt(r_lo r_hi), r_hi]
// of the log window, at every jump inside it and on a dyadic grid.
struct Estimate {
  double value = 0.0;
  bool infinite = false;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

Estimate order_at_infinity(const StepFunction& f, double r_lo, double r_hi);
Estimate type_at(const StepFunction& f, double p, double r_lo, double r_hi);

struct ConvergenceReport {
  double integral = 0.0;      // int_{r0}^{R} |f| / t^{p+1}
  double stieltjes = 0.0;     // int_{(r0, R]} df / t^p
  double parts_rhs = 0.0;     // f(R)/R^p - f(r0)/r0^p + p int f / t^{p+1}
  TrendReport trend;          // integral against R over dyadic R
  bool converges = true;
};

ConvergenceReport convergence_integral_inf(const StepFunction& f, double p, double r0, double R);

struct ZeroReport {
  double integral = 0.0;       // int_0^{r0} |f| / t^{p+1}, infinite when f(0+) != 0
  double shifted = 0.0;        // int_0^{r0} (f - f(0)) / t^{p+1}
  double stieltjes = 0.0;      // int_{(0, r0]} df / t^p
  double log_stieltjes = 0.0;  // int_{(0, r0]} log t df
  double identity_rhs = 0.0;   // right side of the parts identity matching p
  double f0 = 0.0;
  std::vector<double> radii;   // r0 2^{-k}
  std::vector<double> f_log_r; // f(r) log r along radii
};

ZeroReport convergence_integral_zero(const StepFunction& f, double p, double r0);

struct GrowthReport {
  Estimate order;
  Estimate type;
  ConvergenceReport convergence;
};

GrowthReport growth_report(const StepFunction& f, double p, double r_lo, double r_hi);

}  // namespace balayage
