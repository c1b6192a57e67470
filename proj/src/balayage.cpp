#include "balayage/balayage.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "balayage/errors.hpp"
#include "balayage/harmonic_measure.hpp"
#include "balayage/quadrature.hpp"

namespace balayage {

namespace {

bool same_angle(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d) <= kAngularTolerance;
}

constexpr double kVariationTol = 1e-11;

}  // namespace

BalayageCharge::BalayageCharge(RaySystem rays, AtomicCharge kept, std::vector<SweptAtom> swept)
    : rays_(std::move(rays)), kept_(std::move(kept)), swept_(std::move(swept)) {}

bool BalayageCharge::contributes(const SweptAtom& s, std::size_t j, bool& alpha, bool& beta) const {
  alpha = s.alpha_ray == j;
  beta = s.beta_ray == j;
  return alpha || beta;
}

double BalayageCharge::origin_mass() const {
  double m = 0;
  for (const auto& a : kept_.atoms())
    if (a.z == Complex(0, 0)) m += a.mass;
  return m;
}

double BalayageCharge::kept_on_ray(std::size_t j, double a, double b, bool variation) const {
  std::map<double, double> by_radius;
  for (const auto& at : kept_.atoms()) {
    const auto ray = rays_.ray_of(at.z);
    if (!ray || *ray != j) continue;
    const double t = std::abs(at.z);
    if (t > a && t <= b) by_radius[t] += at.mass;
  }
  double s = 0;
  for (const auto& [t, m] : by_radius) s += variation ? std::abs(m) : m;
  return s;
}

double BalayageCharge::ray_mass(std::size_t j, double a, double b) const {
  if (j >= rays_.size()) fail(ErrorCode::InvalidArgument, "ray index out of range");
  if (!(a >= 0) || !(a <= b)) fail(ErrorCode::InvalidArgument, "ray piece needs 0 <= a <= b");
  if (a == b) return 0.0;
  double s = kept_on_ray(j, a, b, false);
  for (const auto& sw : swept_) {
    bool al, be;
    if (!contributes(sw, j, al, be)) continue;
    if (al) s += sw.source.mass * hm_sector_segment(sw.host, sw.source.z, Edge::Alpha, a, b);
    if (be) s += sw.source.mass * hm_sector_segment(sw.host, sw.source.z, Edge::Beta, a, b);
  }
  return s;
}

double BalayageCharge::ray_density(std::size_t j, double t) const {
  if (!(t > 0)) return 0.0;
  double s = 0;
  for (const auto& sw : swept_) {
    bool al, be;
    if (!contributes(sw, j, al, be)) continue;
    const double k = sw.host.exponent();
    const double tk = std::pow(t, k);
    const double jac = k * tk / t;
    if (al) s += sw.source.mass * poisson_kernel(tk, sw.reduced) * jac;
    if (be) s += sw.source.mass * poisson_kernel(-tk, sw.reduced) * jac;
  }
  return s;
}

std::vector<double> BalayageCharge::ray_features(std::size_t j) const {
  std::vector<double> f;
  for (const auto& sw : swept_) {
    bool al, be;
    if (!contributes(sw, j, al, be)) continue;
    const double k = sw.host.exponent();
    f.push_back(std::abs(sw.source.z));
    const double x = sw.reduced.real();
    const double y = sw.reduced.imag();
    for (double s : {x - y, x, x + y}) {
      if (al && s > 0) f.push_back(std::pow(s, 1.0 / k));
      if (be && s < 0) f.push_back(std::pow(-s, 1.0 / k));
    }
  }
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

bool BalayageCharge::mixed_signs(std::size_t j) const {
  bool pos = false, neg = false;
  for (const auto& sw : swept_) {
    bool al, be;
    if (!contributes(sw, j, al, be)) continue;
    (sw.source.mass > 0 ? pos : neg) = true;
  }
  return pos && neg;
}

double BalayageCharge::ray_variation(std::size_t j, double a, double b) const {
  if (j >= rays_.size()) fail(ErrorCode::InvalidArgument, "ray index out of range");
  if (!(a >= 0) || !(a <= b)) fail(ErrorCode::InvalidArgument, "ray piece needs 0 <= a <= b");
  if (a == b) return 0.0;
  double s = kept_on_ray(j, a, b, true);
  if (!mixed_signs(j)) return s + std::abs(ray_mass(j, a, b) - kept_on_ray(j, a, b, false));
  QuadratureOptions opt;
  opt.abs_tol = kVariationTol;
  opt.max_intervals = 400000;
  return s + integral([this, j](double t) { return std::abs(ray_density(j, t)); }, a, b, opt, ray_features(j));
}

double BalayageCharge::total_mass() const {
  double s = 0;
  for (const auto& a : kept_.atoms())
    if (!rays_.ray_of(a.z)) s += a.mass;  // origin and off-system atoms
  for (std::size_t j = 0; j < rays_.size(); ++j) s += ray_mass(j, 0.0, INFINITY);
  return s;
}

double BalayageCharge::radial(double r) const {
  if (!(r >= 0)) fail(ErrorCode::InvalidArgument, "radius must be nonnegative");
  double s = 0;
  for (const auto& a : kept_.atoms())
    if (std::abs(a.z) <= r) s += a.mass;
  if (r == 0) return s;
  for (const auto& sw : swept_) s += sw.source.mass * hm_sector_disk(sw.host, sw.source.z, r);
  return s;
}

double BalayageCharge::radial_variation(double r) const {
  if (!(r >= 0)) fail(ErrorCode::InvalidArgument, "radius must be nonnegative");
  double s = 0;
  const AtomicCharge merged = kept_.merged();
  for (const auto& a : merged.atoms())
    if (std::abs(a.z) <= r) s += std::abs(a.mass);
  if (r == 0 || swept_.empty()) return s;
  bool pos = false, neg = false;
  for (const auto& sw : swept_) (sw.source.mass > 0 ? pos : neg) = true;
  if (!(pos && neg)) {
    double c = 0;
    for (const auto& sw : swept_) c += sw.source.mass * hm_sector_disk(sw.host, sw.source.z, r);
    return s + std::abs(c);
  }
  for (std::size_t j = 0; j < rays_.size(); ++j) {
    const double kept = kept_on_ray(j, 0.0, r, true);
    s += ray_variation(j, 0.0, r) - kept;
  }
  return s;
}

RadialDistribution BalayageCharge::ray_distribution(std::size_t j) const {
  if (j >= rays_.size()) fail(ErrorCode::InvalidArgument, "ray index out of range");
  RadialDistribution d;
  const double origin = origin_mass();
  d.value = [this, j, origin](double t) { return t <= 0 ? origin : origin + ray_mass(j, 0.0, t); };
  d.breakpoints = ray_features(j);
  for (const auto& a : kept_.atoms()) {
    const auto ray = rays_.ray_of(a.z);
    if (ray && *ray == j) d.breakpoints.push_back(std::abs(a.z));
  }
  std::sort(d.breakpoints.begin(), d.breakpoints.end());
  d.constant_tail = swept_.empty();
  d.tail_value = origin + ray_mass(j, 0.0, INFINITY);
  d.tail_from = d.breakpoints.empty() ? 0.0 : d.breakpoints.back();
  return d;
}

double BalayageCharge::real_set(double lo, bool lo_closed, double hi, bool hi_closed, bool variation) const {
  std::optional<std::size_t> pos, neg;
  for (std::size_t j = 0; j < rays_.size(); ++j) {
    if (same_angle(rays_.theta(j), 0.0))
      pos = j;
    else if (same_angle(rays_.theta(j), kPi))
      neg = j;
    else
      fail(ErrorCode::SupportOffAxis, "target rays leave the real axis");
  }
  double s = 0;
  std::map<double, double> atoms;
  for (const auto& a : kept_.atoms()) {
    if (a.z.imag() != 0) continue;
    const double x = a.z.real();
    const bool in_lo = lo_closed ? x >= lo : x > lo;
    const bool in_hi = hi_closed ? x <= hi : x < hi;
    if (in_lo && in_hi) atoms[x] += a.mass;
  }
  for (const auto& [x, m] : atoms) s += variation ? std::abs(m) : m;
  auto piece = [&](std::size_t j, double a, double b) {
    if (!(a < b)) return 0.0;
    const double kept = kept_on_ray(j, a, b, variation);
    return (variation ? ray_variation(j, a, b) : ray_mass(j, a, b)) - kept;
  };
  if (pos && hi > 0) s += piece(*pos, std::max(lo, 0.0), hi);
  if (neg && lo < 0) s += piece(*neg, std::max(-hi, 0.0), -lo);
  return s;
}

double BalayageCharge::distribution_on_R(double x) const {
  return x >= 0 ? real_set(0.0, true, x, true, false) : -real_set(x, true, 0.0, false, false);
}

double BalayageCharge::variation_on_R(double x) const {
  return x >= 0 ? real_set(0.0, true, x, true, true) : -real_set(x, true, 0.0, false, true);
}

BalayageCharge balayage_halfplane(const AtomicCharge& nu) {
  const RaySystem axis = RaySystem::real_axis();
  const Sector upper(0.0, kPi);
  std::vector<Atom> kept;
  std::vector<SweptAtom> swept;
  for (const auto& a : nu.atoms()) {
    if (upper.contains(a.z))
      swept.push_back({a, upper, reduce_to_halfplane(upper, a.z), 0, 1});
    else
      kept.push_back(a);
  }
  return BalayageCharge(axis, AtomicCharge(std::move(kept)), std::move(swept));
}

BalayageCharge balayage_system(const AtomicCharge& nu, const RaySystem& s) {
  std::vector<Atom> kept;
  std::vector<SweptAtom> swept;
  for (const auto& a : nu.atoms()) {
    const PointLocation loc = s.classify(a.z);
    if (std::holds_alternative<OnSystem>(loc)) {
      kept.push_back(a);
      continue;
    }
    const auto& in = std::get<InSector>(loc);
    swept.push_back({a, in.sector, reduce_to_halfplane(in.sector, a.z), in.index, (in.index + 1) % s.size()});
  }
  return BalayageCharge(s, AtomicCharge(std::move(kept)), std::move(swept));
}

double seq_balayage_distribution(const std::vector<Complex>& Z, double x) {
  std::vector<Atom> atoms;
  for (const auto& z : Z) atoms.push_back({z, 1.0});
  return balayage_halfplane(AtomicCharge(std::move(atoms))).distribution_on_R(x);
}

}  // namespace balayage
