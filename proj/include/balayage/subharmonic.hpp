#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "balayage/charges.hpp"
#include "balayage/extended_real.hpp"
#include "balayage/ray_geometry.hpp"

namespace balayage {

// Real-valued function of a complex variable; -inf is allowed at isolated points.
using Evaluable = std::function<double(Complex)>;

// K_q(zeta, z): log|zeta - z| for q = -1, log|1 - z/zeta| + sum_{j<=q} Re (z/zeta)^j / j otherwise.
double kernel_Kq(Complex zeta, Complex z, int q);

// d/dt K_q(t, z) = Re z^{q+1} / (t^{q+1} (t - z)).
double kernel_Kq_radial_derivative(Complex z, double t, int q);

// q(t) = genera[n] for radii[n] <= t < radii[n+1]; radii[0] = 0, genera[0] = -1, radii[1] >= 1.
class GenusSchedule {
 public:
  GenusSchedule(std::vector<double> radii, std::vector<int> genera);
  static GenusSchedule fixed(int q);
  int genus(double t) const;
  const std::vector<double>& radii() const noexcept { return radii_; }
  const std::vector<int>& genera() const noexcept { return genera_; }

 private:
  GenusSchedule() = default;
  std::vector<double> radii_;
  std::vector<int> genera_;
};

// Sum over atoms of |m| (x0 / |zeta|)^{q(|zeta|)+1}, for atoms with nonnegative genus.
double schedule_series(const AtomicCharge& nu, const GenusSchedule& s, double x0);

// Harmonic polynomial Re sum_k c_k z^k.
struct HarmonicPolynomial {
  std::vector<Complex> coefficients;
  double operator()(Complex z) const;
};

class CanonicalPotential {
 public:
  CanonicalPotential(AtomicCharge charge, GenusSchedule schedule, HarmonicPolynomial harmonic = {});
  CanonicalPotential(AtomicCharge charge, int q, HarmonicPolynomial harmonic = {});
  const AtomicCharge& charge() const noexcept { return charge_; }
  const GenusSchedule& schedule() const noexcept { return schedule_; }
  // Bottom exactly at atoms of positive mass; throws Singularity at atoms of negative mass.
  ExtendedReal operator()(Complex z) const;
  Evaluable evaluable() const;

 private:
  AtomicCharge charge_;
  GenusSchedule schedule_;
  HarmonicPolynomial harmonic_;
};

ExtendedReal potential_eval(const CanonicalPotential& p, Complex z);

struct CircleMeanOptions {
  int initial_nodes = 64;
  int max_nodes = 1 << 13;  // adaptive quadrature in theta takes over past this
  double tol = 1e-8;
};

// (1/2pi) int v(r e^{i theta}) d theta by jittered trapezoid rules with node doubling and Richardson,
// then adaptive Gauss-Kronrod when the rules do not settle (log singularities on the circle).
double circle_mean(const Evaluable& v, double r, const CircleMeanOptions& options = {});

// Radii and angles where v may have kinks or log singularities; seeds the quadrature partitions.
struct Hints {
  std::vector<double> radii;
  std::vector<double> angles;
};

Hints hints_for(const AtomicCharge& nu);

struct ClassAFunctionals {
  double A = 0.0;
  double B = 0.0;
  double J = 0.0;
  double A_from_J = 0.0;     // J minus the r^{-2k} correction
  double A_from_nested = 0.0;  // weighted integral of J(r0, t)
};

ClassAFunctionals class_A_functionals(const Evaluable& v, double alpha, double beta, double r0, double r,
                                      const Hints& hints = {});

// A + B over the given radii, with trend against log r.
TrendReport class_A_sweep(const Evaluable& v, double alpha, double beta, double r0,
                          const std::vector<double>& radii, const Hints& hints = {});

struct CarlemanReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double A = 0.0;
  double B = 0.0;
  double inner_correction = 0.0;
  double circle_correction = 0.0;
};

// v = sum m log|z - zeta| + H over the atoms of nu, which must lie in the closed upper half-plane.
CarlemanReport carleman_check(const AtomicCharge& nu, double r0, double r, const HarmonicPolynomial& h = {});

struct SweptValue {
  double value = 0.0;
  double tail_estimate = 0.0;
};

struct SweepOptions {
  double reduced_cutoff = 1e9;
  double tol = 1e-6;
  double quad_tol = 1e-12;
};

// Harmonic extension of v|S into the sector containing z, truncated in the reduced variable.
SweptValue subharmonic_balayage_eval(const Evaluable& v, const RaySystem& s, Complex z,
                                     const SweepOptions& options = {}, const Hints& hints = {});

}  // namespace balayage
