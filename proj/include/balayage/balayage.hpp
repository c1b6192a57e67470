#pragma once

#include <cstddef>
#include <vector>

#include "balayage/charges.hpp"
#include "balayage/ray_geometry.hpp"
#include "balayage/step_function.hpp"

namespace balayage {

// Off-system source atom with the sector it is swept from.
struct SweptAtom {
  Atom source;
  Sector host;
  Complex reduced;         // source in the half-plane coordinate of host
  std::size_t alpha_ray;   // target ray carrying the alpha edge
  std::size_t beta_ray;    // target ray carrying the beta edge
};

// Swept charge: kept atoms plus one Poisson density per swept source, stored symbolically.
class BalayageCharge {
 public:
  BalayageCharge(RaySystem rays, AtomicCharge kept, std::vector<SweptAtom> swept);

  const RaySystem& rays() const noexcept { return rays_; }
  const AtomicCharge& kept() const noexcept { return kept_; }
  const std::vector<SweptAtom>& swept() const noexcept { return swept_; }

  double origin_mass() const;
  // Signed mass on {t e^{i theta_j} : a < t <= b}; b may be +inf. Closed form.
  double ray_mass(std::size_t j, double a, double b) const;
  // Total variation of the same piece; exact when the contributing sources share a sign, quadrature otherwise.
  double ray_variation(std::size_t j, double a, double b) const;
  // Density of the swept part along ray j with respect to dt, t > 0.
  double ray_density(std::size_t j, double t) const;
  // Radii where the density of ray j has features (source moduli and reduced peak positions).
  std::vector<double> ray_features(std::size_t j) const;

  double total_mass() const;
  // Mass and variation of the closed disk of radius r.
  double radial(double r) const;
  double radial_variation(double r) const;

  // nu(l_j closed-disk(t)), origin included.
  RadialDistribution ray_distribution(std::size_t j) const;

  // Distribution function on R of the part carried by the real axis.
  // Requires every target ray to lie on R (SupportOffAxis otherwise).
  double distribution_on_R(double x) const;
  double variation_on_R(double x) const;

 private:
  bool contributes(const SweptAtom& s, std::size_t j, bool& alpha, bool& beta) const;
  bool mixed_signs(std::size_t j) const;
  // Mass (or variation) of the real set between lo and hi with the given endpoint closure.
  double real_set(double lo, bool lo_closed, double hi, bool hi_closed, bool variation) const;
  double kept_on_ray(std::size_t j, double a, double b, bool variation) const;

  RaySystem rays_;
  AtomicCharge kept_;
  std::vector<SweptAtom> swept_;
};

BalayageCharge balayage_halfplane(const AtomicCharge& nu);
BalayageCharge balayage_system(const AtomicCharge& nu, const RaySystem& s);

// Distribution function on R of the balayage of unit atoms at the points of Z.
double seq_balayage_distribution(const std::vector<Complex>& Z, double x);

}  // namespace balayage
