#include <cmath>
#include <sstream>

#include "balayage/errors.hpp"
#include "balayage/harmonic_measure.hpp"

namespace balayage {

bool BoundReport::all_hold() const {
  for (const auto& b : bounds)
    if (!b.holds) return false;
  return true;
}

namespace {

struct Builder {
  BoundReport& report;
  double slack;

  void add(const std::string& name, const std::string& hyp, BoundSide side, double value) {
    const bool ok = side == BoundSide::Upper ? report.exact <= value + slack : value <= report.exact + slack;
    report.bounds.push_back({name, hyp, side, value, ok});
  }
  void skip(const std::string& name, const std::string& reason) { report.omitted.push_back({name, reason}); }
};

// Bounds for intervals on one side of the origin, stated for 0 <= t1 < t2.
void same_sign_bounds(Builder& out, Complex z, double t1, double t2, double a) {
  const double y = z.imag();
  const double modz = std::abs(z);
  const double imc = y / (modz * modz);
  const double cosarg = z.real() / modz;
  const double g = std::sqrt(t1 * t2);
  const double gm = 2.0 * g / (t1 + t2);

  if (cosarg <= 0)
    out.add("obtuse_upper", "cos arg z <= 0", BoundSide::Upper, (t2 - t1) / kPi * imc);
  else
    out.skip("obtuse_upper", "cos arg z > 0");

  if (cosarg > -1 && cosarg < gm && modz != g)
    out.add("cone_upper", "-1 < cos arg z < 2 sqrt(t1 t2)/(t1 + t2)", BoundSide::Upper,
            (t2 - t1) * y / (kPi * (modz - g) * (modz - g)));
  else
    out.skip("cone_upper", "cos arg z outside the cone");

  if (cosarg > -1 && cosarg <= a * gm)
    out.add("cone_upper_a", "-1 < cos arg z <= 2a sqrt(t1 t2)/(t1 + t2)", BoundSide::Upper,
            (t2 - t1) / (kPi * (1 - a * a)) * imc);
  else
    out.skip("cone_upper_a", "cos arg z outside the narrowed cone");

  // fails near the origin without |z| >= t2, e.g. z = 0.01i on [1, 2]
  if (t1 > 0 && cosarg > -1 && cosarg < gm && modz >= t2)
    out.add("positive_ratio_lower", "0 < t1, |z| >= t2 and -1 < cos arg z < 2 sqrt(t1 t2)/(t1 + t2)", BoundSide::Lower,
            (t1 / t2) * (t2 - t1) * imc / (8 * kPi));
  else
    out.skip("positive_ratio_lower", "needs 0 < t1, |z| >= t2 and z in the cone");
}

}  // namespace

BoundReport hm_bounds(Complex z, const Interval& I, const BoundParameters& params) {
  const double a = params.a;
  const double b = params.b;
  if (!(a > 0 && a < 1)) fail(ErrorCode::InvalidArgument, "bound parameter a must lie in (0,1)");
  if (!(b > 1)) fail(ErrorCode::InvalidArgument, "bound parameter b must exceed 1");
  BoundReport report;
  report.exact = hm_interval(z, I);
  Builder out{report, params.slack};

  const double t1 = I.t1;
  const double t2 = I.t2;
  const double x = z.real();
  const double y = z.imag();
  if (y <= 0) {
    out.skip("all", "z is real; the measure is a Dirac value");
    return report;
  }
  const double modz = std::abs(z);
  const double imc = y / (modz * modz);
  const double n = (t2 - t1) * y;
  const double d = (x - t1) * (x - t2) + y * y;
  const double x0 = I.center();
  const double r = I.radius();
  const double rho = std::abs(z - x0);

  if (d > 0)
    out.add("angle_upper", "z outside the closed semidisk on [t1,t2]", BoundSide::Upper, n / (kPi * d));
  else
    out.skip("angle_upper", "z inside or on the semidisk");
  if (d < 0)
    out.add("angle_lower_inside", "z inside the open semidisk on [t1,t2]", BoundSide::Lower, 1 + n / (kPi * d));
  else
    out.skip("angle_lower_inside", "z outside the open semidisk");

  if (rho >= b * r) {
    const double c = (b - 1) / (2 * kPi * b);
    out.add("separated_lower", "|z - x0| >= b r", BoundSide::Lower, c * n / d);
    out.add("separated_lower_coarse", "|z - x0| >= b r", BoundSide::Lower,
            c * n / ((modz + std::abs(t1)) * (modz + std::abs(t2))));
  } else {
    out.skip("separated_lower", "|z - x0| < b r");
    out.skip("separated_lower_coarse", "|z - x0| < b r");
  }

  const double tmax = std::max(std::abs(t1), std::abs(t2));
  if (a * modz >= tmax) {
    out.add("far_point_upper", "a|z| >= max(|t1|,|t2|)", BoundSide::Upper,
            (t2 - t1) / (kPi * (1 - a) * (1 - a)) * imc);
    out.add("far_point_lower", "a|z| >= max(|t1|,|t2|)", BoundSide::Lower, (t2 - t1) * (1 - a) / (8 * kPi) * imc);
  } else {
    out.skip("far_point_upper", "a|z| < max(|t1|,|t2|)");
    out.skip("far_point_lower", "a|z| < max(|t1|,|t2|)");
  }

  const double tmin = (t1 <= 0 && t2 >= 0) ? 0.0 : std::min(std::abs(t1), std::abs(t2));
  if (a * tmin >= modz)
    out.add("near_point_upper", "a min|t| over [t1,t2] >= |z|", BoundSide::Upper,
            (t2 - t1) * a * a / (kPi * (1 - a) * (1 - a)) * imc);
  else
    out.skip("near_point_upper", "a min|t| < |z|");

  if (t1 >= 0)
    same_sign_bounds(out, z, t1, t2, a);
  else if (t2 <= 0)
    same_sign_bounds(out, Complex(-x, y), -t2, -t1, a);
  else
    out.skip("same_sign", "interval contains the origin in its interior");

  // rho^2 - r^2 equals d; near d = 0 the measure is 1/2 - d/(pi n), so "on" is judged through d.
  const double on_tol = 0.5 * kPi * n * std::max(params.slack, 1e-15);
  if (d > on_tol) {
    out.add("semicircle_upper_outside", "|z - x0| > r", BoundSide::Upper, std::atan(2 * r * rho / d) / kPi);
  } else if (d >= -on_tol) {
    out.add("semicircle_upper_on", "|z - x0| = r", BoundSide::Upper, 0.5);
    out.skip("semicircle_lower_inside", "degenerate on the semicircle");
  } else {
    const double q = 2 * r * rho / -d;
    out.add("semicircle_lower_inside", "|z - x0| < r", BoundSide::Lower, 1 - std::atan(q) / kPi);
    out.add("semicircle_lower_inside_linear", "|z - x0| < r", BoundSide::Lower, 1 - q / kPi);
  }
  return report;
}

}  // namespace balayage
