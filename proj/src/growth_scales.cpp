#include "balayage/growth_scales.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "balayage/errors.hpp"

namespace balayage {

namespace {

void check_window(double r_lo, double r_hi) {
  if (!(r_lo > 0 && r_lo < r_hi) || !std::isfinite(r_hi))
    fail(ErrorCode::InvalidArgument, "window needs 0 < r_lo < r_hi");
}

// Candidate radii: jump points in [lo, hi], plus a dyadic grid.
std::vector<double> candidates(const StepFunction& f, double lo, double hi) {
  std::vector<double> r = dyadic_grid(lo, hi, 8);
  r.push_back(hi);
  const auto& x = f.points();
  for (auto it = std::lower_bound(x.begin(), x.end(), lo); it != x.end() && *it <= hi; ++it) r.push_back(*it);
  return r;
}

template <typename G>
Estimate sup_estimate(const StepFunction& f, double r_lo, double r_hi, G g) {
  check_window(r_lo, r_hi);
  Estimate e;
  e.window_lo = std::sqrt(r_lo * r_hi);
  e.window_hi = r_hi;
  double best = 0.0;
  for (double r : candidates(f, e.window_lo, r_hi)) best = std::max(best, g(std::max(f(r), 0.0), r));
  e.value = best;
  return e;
}

}  // namespace

Estimate order_at_infinity(const StepFunction& f, double r_lo, double r_hi) {
  if (!(r_lo > 1)) fail(ErrorCode::InvalidArgument, "order window must start above 1");
  Estimate e = sup_estimate(f, r_lo, r_hi, [](double v, double r) { return std::log1p(v) / std::log(r); });
  if (e.value > kOrderCap) {
    e.infinite = true;
    e.value = std::numeric_limits<double>::infinity();
  }
  return e;
}

Estimate type_at(const StepFunction& f, double p, double r_lo, double r_hi) {
  if (!(p >= 0)) fail(ErrorCode::InvalidArgument, "p must be nonnegative");
  Estimate e = sup_estimate(f, r_lo, r_hi, [p](double v, double r) { return v / std::pow(r, p); });
  if (!std::isfinite(e.value)) e.infinite = true;
  return e;
}

ConvergenceReport convergence_integral_inf(const StepFunction& f, double p, double r0, double R) {
  check_window(r0, R);
  if (!(p >= 0)) fail(ErrorCode::InvalidArgument, "p must be nonnegative");
  ConvergenceReport c;
  c.integral = f.integral_abs_power(-(p + 1), r0, R);
  c.stieltjes = f.stieltjes_power(-p, r0, R);
  c.parts_rhs = f(R) / std::pow(R, p) - f(r0) / std::pow(r0, p) + p * f.integral_power(-(p + 1), r0, R);
  std::vector<double> radii, values;
  double acc = 0.0, prev = r0;
  for (double r : dyadic_grid(2 * r0 > R ? R : 2 * r0, R, 4)) {
    acc += f.integral_abs_power(-(p + 1), prev, r);
    prev = r;
    radii.push_back(r);
    values.push_back(acc);
  }
  c.trend = log_trend(radii, values);
  c.converges = !c.trend.divergent;
  return c;
}

ZeroReport convergence_integral_zero(const StepFunction& f, double p, double r0) {
  if (!(r0 > 0) || !(p >= 0)) fail(ErrorCode::InvalidArgument, "needs r0 > 0 and p >= 0");
  ZeroReport z;
  z.f0 = f(0.0);
  std::vector<std::pair<double, double>> jumps;
  const auto& x = f.points();
  const auto& h = f.sizes();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0) jumps.emplace_back(x[i], h[i]);
  const StepFunction g(jumps);
  const double first = g.empty() ? r0 : std::min(g.points().front(), r0);
  z.shifted = g.integral_power(-(p + 1), first, r0);
  z.integral = z.f0 != 0 ? std::numeric_limits<double>::infinity() : g.integral_abs_power(-(p + 1), first, r0);
  z.stieltjes = f.stieltjes_power(-p, 0.0, r0);
  z.log_stieltjes = f.stieltjes_log(0.0, r0);
  const double dr = f(r0) - z.f0;
  z.identity_rhs = p > 0 ? -dr / (p * std::pow(r0, p)) + z.stieltjes / p : dr * std::log(r0) - z.log_stieltjes;
  for (int k = 1; k <= 60; ++k) {
    const double r = r0 * std::exp2(-k);
    z.radii.push_back(r);
    z.f_log_r.push_back(f(r) * std::log(r));
  }
  return z;
}

GrowthReport growth_report(const StepFunction& f, double p, double r_lo, double r_hi) {
  GrowthReport g;
  g.order = order_at_infinity(f, r_lo, r_hi);
  g.type = type_at(f, p, r_lo, r_hi);
  g.convergence = convergence_integral_inf(f, p, r_lo, r_hi);
  return g;
}

}  // namespace balayage
