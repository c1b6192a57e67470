#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "balayage/balayage.hpp"
#include "balayage/charges.hpp"
#include "balayage/step_function.hpp"
#include "balayage/subharmonic.hpp"

namespace balayage {

// max of v(r e^{i theta}) / r^p over a dyadic grid in [r_lo, r_hi].
double indicator_estimate(const Evaluable& v, double theta, double p, double r_lo, double r_hi, int per_octave = 8);

// int_{(lower, inf)} Re z^{q+1} / (t^{q+1} (z - t)) n(t) dt in closed form:
// K_q(lower, z) n(lower) + sum of jumps h_j K_q(t_j, z) over t_j > lower. lower = 0 needs n(0) = 0.
double kernel_stieltjes(const StepFunction& n, int q, Complex z, double lower = 0.0);

struct PVReport {
  double value = 0.0;
  std::vector<double> epsilons;  // empty off the positive axis
  std::vector<double> excised;   // integral with (x - eps, x + eps) removed
  double richardson_gap = 0.0;
};

// The same integral by quadrature; on the positive axis, symmetric excision with Richardson in eps.
// Throws SingularityUnresolved when the extrapolation does not settle to tol.
PVReport pv_kernel_report(const StepFunction& n, int q, Complex z, double epsilon = 1e-2, double lower = 0.0,
                          double tol = 1e-6);
double pv_kernel_integral(const StepFunction& n, int q, Complex z, double epsilon = 1e-2, double lower = 0.0);

inline constexpr double kExceptionalFraction = 0.05;

struct RayLimit {
  std::size_t ray = 0;
  double theta = 0.0;
  std::vector<double> radii;
  std::vector<double> values;
  double limit = 0.0;
  double spread = 0.0;  // largest residual among retained radii
  double exceptional_density = 0.0;
  bool stable = false;
};

struct CRGReport {
  double p = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::vector<RayLimit> rays;
  bool stable = false;
};

// Counting functions per ray of a charge carried by S; origin atoms go to ray 0 at t = 0.
std::vector<StepFunction> ray_counting(const AtomicCharge& nu, const RaySystem& s);
// Ray distributions of a balayage sampled on a uniform grid of [0, t_max] merged with the kept atoms.
std::vector<StepFunction> sampled_ray_counting(const BalayageCharge& bal, double t_max, std::size_t cells);

// Radii r_lo 2^{(i + u_i)/per_octave} with golden-ratio offsets u_i, so that integer radii are avoided.
std::vector<double> jittered_grid(double r_lo, double r_hi, int per_octave);

// r^{-p} sum_j' of the kernel integrals from 1 of n_j' at z = r e^{i(theta_j - theta_j')}, q = [p].
double crg_value(const RaySystem& s, const std::vector<StepFunction>& n, double p, std::size_t j, double r);

CRGReport crg_on_rays(const RaySystem& s, const std::vector<StepFunction>& n, double p, double r_lo, double r_hi,
                      double tol = 0.05, int per_octave = 16);
// n_j(r) / r^p per ray, for 0 < p < 1.
CRGReport crg_small_p(const RaySystem& s, const std::vector<StepFunction>& n, double p, double r_lo, double r_hi,
                      double tol = 0.05, int per_octave = 16);

using RadialFunction = std::function<double(double)>;

// b_k(t) = 2 int_0^inf (n_k + n_{k+1})(s) s / (s^4 + t^2) ds, indices mod 4.
std::array<double, 4> exgr2_b(const std::array<RadialFunction, 4>& n, double t);
std::array<double, 4> exgr2_b(const std::array<StepFunction, 4>& n, double t);

struct Exgr2Report {
  std::vector<double> ts;
  std::vector<std::array<double, 4>> b;
  std::vector<double> radii;
  std::vector<Complex> L;  // int_1^r sum_k i^{k+1} b_k(t) / (2t) dt
};

Exgr2Report exgr2_functionals(const std::array<StepFunction, 4>& n, const std::vector<double>& ts,
                              const std::vector<double>& radii);

struct AngularDensity {
  std::vector<double> radii;
  std::vector<double> ratios;
  double limit = 0.0;             // median over the upper half of the radii
  std::vector<Complex> lindelof;  // for integer p
};

AngularDensity angular_density(const AtomicCharge& nu, double alpha, double beta, double p,
                               const std::vector<double>& radii);

}  // namespace balayage
