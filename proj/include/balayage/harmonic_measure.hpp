#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "balayage/ray_geometry.hpp"

namespace balayage {

struct Interval {
  double t1;
  double t2;
  Interval(double lo, double hi);  // requires finite lo < hi
  double center() const noexcept { return 0.5 * (t1 + t2); }
  double radius() const noexcept { return 0.5 * (t2 - t1); }
};

// Radial piece {t e^{i theta_ray} : a <= t <= b} of a ray system (or of a sector edge, ray = 0 for alpha, 1 for beta).
struct BoundarySegment {
  std::size_t ray;
  double a;
  double b;
};

// Subset of a ray system: finite union of segments plus optionally the trace of the closed disk of radius disk_radius.
struct SystemSet {
  std::vector<BoundarySegment> segments;
  std::optional<double> disk_radius;
};

// (1/pi) Im z / ((t - Re z)^2 + (Im z)^2); throws NotInUpperHalfPlane for Im z <= 0.
double poisson_kernel(double t, Complex z);

// Harmonic measure of [t1, t2] at z in the closed upper half-plane.
// Real z gives the Dirac value (indicator of the open interval); endpoints throw EndpointSingularity.
double hm_interval(Complex z, const Interval& I);

// Same measure for lo < hi with infinite ends allowed.
double hm_real_set(Complex z, double lo, double hi);

// Quadrature of the Poisson kernel over I; independent check of hm_interval.
double hm_interval_quad(Complex z, const Interval& I, double tol = 1e-10);

// Harmonic measure of the edge piece {t e^{i edge}: a <= t <= b} (b may be +inf) at an interior point.
double hm_sector_segment(const Sector& sec, Complex z, Edge edge, double a, double b);

// Harmonic measure of the sector boundary inside the closed disk of radius r.
double hm_sector_disk(const Sector& sec, Complex z, double r);

double hm_system(const RaySystem& s, Complex z, const SystemSet& set);

enum class BoundSide { Lower, Upper };

struct BoundEntry {
  std::string name;
  std::string hypothesis;
  BoundSide side;
  double value;
  bool holds;
};

struct OmittedBound {
  std::string name;
  std::string reason;
};

struct BoundParameters {
  double a = 0.5;  // in (0, 1)
  double b = 2.0;  // separation factor > 1
  double slack = 1e-12;
};

struct BoundReport {
  double exact = 0.0;
  std::vector<BoundEntry> bounds;
  std::vector<OmittedBound> omitted;
  bool all_hold() const;
};

// Every closed-form bound for the interval measure whose hypothesis holds at (z, I).
BoundReport hm_bounds(Complex z, const Interval& I, const BoundParameters& params = {});

// Upper bound for hm_sector_disk when a|z| >= r; empty when the hypothesis fails.
std::optional<double> sector_disk_upper_bound(const Sector& sec, Complex z, double r, double a);
// Upper bound for the measure of the boundary outside the open disk of radius r when a r >= |z|.
std::optional<double> sector_outside_disk_upper_bound(const Sector& sec, Complex z, double r, double a);

}  // namespace balayage
