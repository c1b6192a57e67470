#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "balayage/ray_geometry.hpp"
#include "balayage/step_function.hpp"
#include "balayage/trend.hpp"

namespace balayage {

struct Atom {
  Complex z;
  double mass;
};

class AtomicCharge {
 public:
  AtomicCharge() = default;
  explicit AtomicCharge(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  bool is_positive() const;

  double total_mass() const;
  double total_variation() const;

  // Coincident atoms combined, cancelled atoms dropped.
  AtomicCharge merged() const;
  AtomicCharge variation() const;
  AtomicCharge positive_part() const;
  AtomicCharge negative_part() const;
  AtomicCharge scaled(double c) const;
  AtomicCharge restricted(const std::function<bool(Complex)>& keep) const;
  AtomicCharge operator+(const AtomicCharge& other) const;

 private:
  std::vector<Atom> atoms_;
};

using AtomGenerator = std::function<Atom(std::size_t)>;
AtomicCharge truncate(const AtomGenerator& gen, std::size_t n);

// r -> nu(closed disk of radius r), or |nu| with variation = true.
StepFunction radial_counting(const AtomicCharge& nu, bool variation = false);
// Count inside the closed disk D(center, r).
double disk_mass(const AtomicCharge& nu, Complex center, double r, bool variation = false);

// -nu([x,0)) for x < 0, nu([0,x]) for x >= 0; throws SupportOffAxis for atoms off R.
double distribution_on_R(const AtomicCharge& nu, double x);

struct BlaschkeReport {
  double sum = 0.0;
  bool finite = true;
};

BlaschkeReport blaschke_halfplane(const AtomicCharge& nu, double r0);
BlaschkeReport blaschke_sector(const AtomicCharge& nu, const Sector& sec, double r0);

struct SectorBlaschke {
  Sector sector;
  double sum;
};
struct SystemBlaschkeReport {
  std::vector<SectorBlaschke> sectors;
  bool finite = true;
};
SystemBlaschkeReport blaschke_outside_system(const AtomicCharge& nu, const RaySystem& s, double r0);

// Partial sums of the half-plane Blaschke series over truncations n = 1..n_max (log spaced), traced against max|z|.
TrendReport blaschke_halfplane_trend(const AtomGenerator& gen, std::size_t n_max, double r0);

// Sum of m / z^q over r0 < |z| <= r.
Complex lindelof_sum(const AtomicCharge& nu, int q, double r0, double r);
TrendReport lindelof_trend(const AtomicCharge& nu, int q, double r0, const std::vector<double>& radii);

}  // namespace balayage
