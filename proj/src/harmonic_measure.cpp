#include "balayage/harmonic_measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "balayage/errors.hpp"
#include "balayage/quadrature.hpp"

namespace balayage {

Interval::Interval(double lo, double hi) : t1(lo), t2(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    fail(ErrorCode::InvalidArgument, "interval needs finite t1 < t2");
}

double poisson_kernel(double t, Complex z) {
  const double y = z.imag();
  if (!(y > 0)) fail(ErrorCode::NotInUpperHalfPlane, "Poisson kernel needs Im z > 0");
  const double d = t - z.real();
  return y / (kPi * (d * d + y * y));
}

double hm_real_set(Complex z, double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) fail(ErrorCode::InvalidArgument, "empty real set");
  const double x = z.real();
  const double y = z.imag();
  if (y < 0) fail(ErrorCode::NotInUpperHalfPlane, "harmonic measure needs Im z >= 0");
  if (y == 0) {
    if (x == lo || x == hi) fail(ErrorCode::EndpointSingularity, "real point at an interval endpoint");
    return (x > lo && x < hi) ? 1.0 : 0.0;
  }
  if (std::isinf(lo) && std::isinf(hi)) return 1.0;
  if (std::isinf(hi)) return 1.0 - std::atan2(y, x - lo) / kPi;
  if (std::isinf(lo)) return std::atan2(y, x - hi) / kPi;
  // Single arctangent of N/D; atan2 picks the branch: D > 0 outside the semidisk on [lo,hi],
  // D < 0 inside (adds pi), D = 0 on the semicircle (exactly 1/2).
  const double n = (hi - lo) * y;
  const double d = (x - lo) * (x - hi) + y * y;
  return std::atan2(n, d) / kPi;
}

double hm_interval(Complex z, const Interval& I) { return hm_real_set(z, I.t1, I.t2); }

double hm_interval_quad(Complex z, const Interval& I, double tol) {
  if (!(z.imag() > 0)) fail(ErrorCode::NotInUpperHalfPlane, "quadrature oracle needs Im z > 0");
  QuadratureOptions opt;
  opt.abs_tol = tol;
  opt.max_intervals = 200000;
  // The kernel peaks at Re z with width Im z; seed the partition there.
  const double x = z.real();
  const double y = z.imag();
  std::vector<double> cuts{x, x - y, x + y, x - 10 * y, x + 10 * y};
  return integral([z](double t) { return poisson_kernel(t, z); }, I.t1, I.t2, opt, cuts);
}

double hm_sector_segment(const Sector& sec, Complex z, Edge edge, double a, double b) {
  if (!(a >= 0) || !(a < b)) fail(ErrorCode::InvalidArgument, "segment needs 0 <= a < b");
  if (!sec.contains(z)) fail(ErrorCode::InvalidArgument, "point not interior to the sector");
  const Complex w = reduce_to_halfplane(sec, z);
  const double s1 = reduce_edge_radius(sec, edge, a);
  const double s2 = reduce_edge_radius(sec, edge, b);
  return hm_real_set(w, std::min(s1, s2), std::max(s1, s2));
}

double hm_sector_disk(const Sector& sec, Complex z, double r) {
  if (!(r > 0)) fail(ErrorCode::InvalidArgument, "disk radius must be positive");
  if (z == Complex(0, 0)) fail(ErrorCode::ZeroPoint, "disk measure at the origin");
  if (!sec.contains(z)) fail(ErrorCode::InvalidArgument, "point not interior to the sector");
  const Complex w = reduce_to_halfplane(sec, z);
  const double s = std::pow(r, sec.exponent());
  return hm_real_set(w, -s, s);
}

namespace {

using Pieces = std::vector<std::pair<double, double>>;

Pieces merged(Pieces p) {
  std::sort(p.begin(), p.end());
  Pieces out;
  for (const auto& q : p) {
    if (!out.empty() && q.first <= out.back().second)
      out.back().second = std::max(out.back().second, q.second);
    else
      out.push_back(q);
  }
  return out;
}

}  // namespace

double hm_system(const RaySystem& s, Complex z, const SystemSet& set) {
  std::map<std::size_t, Pieces> per_ray;
  for (const auto& seg : set.segments) {
    if (seg.ray >= s.size()) fail(ErrorCode::InvalidArgument, "segment ray index out of range");
    if (!(seg.a >= 0) || !(seg.a < seg.b)) fail(ErrorCode::InvalidArgument, "segment needs 0 <= a < b");
    per_ray[seg.ray].push_back({seg.a, seg.b});
  }
  if (set.disk_radius) {
    if (!(*set.disk_radius > 0)) fail(ErrorCode::InvalidArgument, "disk radius must be positive");
    for (std::size_t j = 0; j < s.size(); ++j) per_ray[j].push_back({0.0, *set.disk_radius});
  }
  for (auto& [j, p] : per_ray) p = merged(p);

  const PointLocation loc = s.classify(z);
  if (const auto* on = std::get_if<OnSystem>(&loc)) {
    if (!on->ray) {
      for (const auto& [j, p] : per_ray)
        if (!p.empty() && p.front().first == 0.0) return 1.0;
      return 0.0;
    }
    const double t = std::abs(z);
    for (const auto& [a, b] : per_ray[*on->ray])
      if (t >= a && t <= b) return 1.0;
    return 0.0;
  }
  const auto& in = std::get<InSector>(loc);
  const std::size_t lower = in.index;
  const std::size_t upper = (in.index + 1) % s.size();
  double total = 0.0;
  for (const auto& [a, b] : per_ray[lower]) total += hm_sector_segment(in.sector, z, Edge::Alpha, a, b);
  for (const auto& [a, b] : per_ray[upper]) total += hm_sector_segment(in.sector, z, Edge::Beta, a, b);
  return total;
}

std::optional<double> sector_disk_upper_bound(const Sector& sec, Complex z, double r, double a) {
  if (!(a > 0 && a < 1) || !(a * std::abs(z) >= r)) return std::nullopt;
  const double k = sec.exponent();
  const Complex w = reduce_to_halfplane(sec, z);
  const double ak = std::pow(a, k);
  return 2.0 * std::pow(r, k) / (kPi * (1 - ak) * (1 - ak)) * (w.imag() / std::norm(w));
}

std::optional<double> sector_outside_disk_upper_bound(const Sector& sec, Complex z, double r, double a) {
  if (!(a > 0 && a < 1) || !(a * r >= std::abs(z))) return std::nullopt;
  const double k = sec.exponent();
  const Complex w = reduce_to_halfplane(sec, z);
  const double ak = std::pow(a, k);
  return 2.0 * std::pow(r, -k) / (kPi * (1 - ak) * (1 - ak)) * w.imag();
}

}  // namespace balayage
