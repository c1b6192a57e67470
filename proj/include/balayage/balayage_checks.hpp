#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "balayage/balayage.hpp"
#include "balayage/charges.hpp"
#include "balayage/trend.hpp"

namespace balayage {

struct DominanceCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

inline constexpr double kDominanceSlack = 1e-12;

// Variation of the half-plane balayage on (t1, t2] against the four-term bound; needs t1 t2 >= 0, a in (0,1).
DominanceCheck check_thcup_bound(const AtomicCharge& nu, double t1, double t2, double a);

using RadiusMap = std::function<double(double)>;

// Radial variation of the half-plane balayage at r against |nu|^rad(g(r)) plus the far-atom tail.
DominanceCheck check_ges_bound(const AtomicCharge& nu, const RadiusMap& g, double r);

struct TypeComparison {
  double p = 1.0;
  double balayage_sup = 0.0;  // max over the grid of |nu^bal|^rad(r) / r^p
  double charge_sup = 0.0;    // max over the grid of |nu|^rad(r) / r^p
};
// Sampled comparison of radial types; diagnostic only, not a limit claim.
TypeComparison sampled_type_comparison(const AtomicCharge& nu, double p, const std::vector<double>& radii);

// The same estimate for a general ray system with the sector Blaschke constant.
DominanceCheck check_nubrB_bound(const AtomicCharge& nu, const RaySystem& s, const RadiusMap& g, double r);

struct LipschitzReport {
  double modulus = 0.0;        // max difference quotient of the distribution on the grid
  double modulus_bound = 0.0;  // closed-form constant for the interval
  double a = 0.0;              // separation factor used by the bound
  bool holds = true;
};
// Needs [x1, x2] inside R without 0 and away from every atom.
LipschitzReport check_lipschitz(const AtomicCharge& nu, double x1, double x2, std::size_t cells = 512);

struct LipschitzGrowthReport {
  double p = 1.0;
  std::vector<double> bin_radii;
  std::vector<double> bin_constants;  // max |dF| / (|dt| |x0|^(p-1)) per dyadic bin
  double fitted_b = 0.0;
  double slope = 0.0;
  bool bounded = true;
};
// Fits the constant b in |dF| <= b |t2 - t1| |x0|^(p-1) over dyadic bins of |x0| in [r0, r1].
LipschitzGrowthReport check_lipschitz_growth(const AtomicCharge& nu, double p, double r0, double r1);

// Continuous function on a ray system, piecewise linear along each ray with compact support.
class RayFunction {
 public:
  RayFunction(std::size_t rays, std::vector<std::pair<std::size_t, std::vector<std::pair<double, double>>>> knots);
  double on_ray(std::size_t j, double t) const;
  double at_origin() const noexcept { return origin_; }
  const std::vector<double>& knots_of(std::size_t j) const { return t_.at(j); }
  double support_end(std::size_t j) const;

 private:
  std::vector<std::vector<double>> t_;
  std::vector<std::vector<double>> v_;
  double origin_ = 0.0;
};

// Hat function with peak 1 at (lo + hi)/2 on [lo, hi] of ray j.
RayFunction hat_function(std::size_t rays, std::size_t j, double lo, double hi);

struct FubiniCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool equal = true;
};
FubiniCheck check_fubini(const AtomicCharge& nu, const RaySystem& s, const RayFunction& F, double tol = 1e-8);

// Poisson extension of F into the complement of S evaluated at z (F itself on S).
double poisson_extension(const RaySystem& s, const RayFunction& F, Complex z);

struct LindelofPreservationReport {
  int p = 1;
  std::vector<double> radii;
  std::vector<Complex> charge_sums;
  std::vector<Complex> balayage_sums;
  std::vector<double> difference;  // |balayage - charge|
  double slope = 0.0;  // log-slope of the difference over the upper half of the radii
  double fitted_constant = 0.0;
  bool bounded = true;
};
LindelofPreservationReport check_lindelof_preservation(const AtomicCharge& nu, const RaySystem& s, int p,
                                                       double r0, const std::vector<double>& radii);

}  // namespace balayage
