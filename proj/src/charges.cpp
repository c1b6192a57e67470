#include "balayage/charges.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "balayage/errors.hpp"

namespace balayage {

AtomicCharge::AtomicCharge(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.z.real()) || !std::isfinite(a.z.imag()) || !std::isfinite(a.mass))
      fail(ErrorCode::InvalidArgument, "atom with non-finite data");
    if (a.mass == 0) fail(ErrorCode::InvalidArgument, "atom with zero mass");
  }
}

bool AtomicCharge::is_positive() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.mass > 0; });
}

double AtomicCharge::total_mass() const {
  double s = 0;
  for (const auto& a : atoms_) s += a.mass;
  return s;
}

double AtomicCharge::total_variation() const {
  double s = 0;
  for (const auto& a : merged().atoms_) s += std::abs(a.mass);
  return s;
}

AtomicCharge AtomicCharge::merged() const {
  std::map<std::pair<double, double>, double> acc;
  std::vector<std::pair<double, double>> order;
  for (const auto& a : atoms_) {
    const auto key = std::make_pair(a.z.real(), a.z.imag());
    if (!acc.count(key)) order.push_back(key);
    acc[key] += a.mass;
  }
  std::vector<Atom> out;
  for (const auto& key : order)
    if (acc[key] != 0) out.push_back({Complex(key.first, key.second), acc[key]});
  return AtomicCharge(std::move(out));
}

AtomicCharge AtomicCharge::variation() const {
  std::vector<Atom> out;
  for (const auto& a : merged().atoms_) out.push_back({a.z, std::abs(a.mass)});
  return AtomicCharge(std::move(out));
}

AtomicCharge AtomicCharge::positive_part() const {
  std::vector<Atom> out;
  for (const auto& a : merged().atoms_)
    if (a.mass > 0) out.push_back(a);
  return AtomicCharge(std::move(out));
}

AtomicCharge AtomicCharge::negative_part() const {
  std::vector<Atom> out;
  for (const auto& a : merged().atoms_)
    if (a.mass < 0) out.push_back({a.z, -a.mass});
  return AtomicCharge(std::move(out));
}

AtomicCharge AtomicCharge::scaled(double c) const {
  if (c == 0) return {};
  std::vector<Atom> out;
  for (const auto& a : atoms_) out.push_back({a.z, c * a.mass});
  return AtomicCharge(std::move(out));
}

AtomicCharge AtomicCharge::restricted(const std::function<bool(Complex)>& keep) const {
  std::vector<Atom> out;
  for (const auto& a : atoms_)
    if (keep(a.z)) out.push_back(a);
  return AtomicCharge(std::move(out));
}

AtomicCharge AtomicCharge::operator+(const AtomicCharge& other) const {
  std::vector<Atom> out = atoms_;
  out.insert(out.end(), other.atoms_.begin(), other.atoms_.end());
  return AtomicCharge(std::move(out));
}

AtomicCharge truncate(const AtomGenerator& gen, std::size_t n) {
  std::vector<Atom> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(gen(k));
  return AtomicCharge(std::move(out));
}

StepFunction radial_counting(const AtomicCharge& nu, bool variation) {
  const AtomicCharge src = variation ? nu.variation() : nu;
  std::vector<std::pair<double, double>> j;
  for (const auto& a : src.atoms()) j.push_back({std::abs(a.z), a.mass});
  return StepFunction(std::move(j));
}

double disk_mass(const AtomicCharge& nu, Complex center, double r, bool variation) {
  const AtomicCharge src = variation ? nu.variation() : nu;
  double s = 0;
  for (const auto& a : src.atoms())
    if (std::abs(a.z - center) <= r) s += a.mass;
  return s;
}

double distribution_on_R(const AtomicCharge& nu, double x) {
  double s = 0;
  for (const auto& a : nu.atoms()) {
    if (a.z.imag() != 0) fail(ErrorCode::SupportOffAxis, "atom off the real axis");
    const double t = a.z.real();
    if (x >= 0 && t >= 0 && t <= x) s += a.mass;
    if (x < 0 && t >= x && t < 0) s -= a.mass;
  }
  return s;
}

BlaschkeReport blaschke_halfplane(const AtomicCharge& nu, double r0) {
  if (!(r0 > 0)) fail(ErrorCode::InvalidArgument, "r0 must be positive");
  BlaschkeReport rep;
  const AtomicCharge var = nu.variation();
  for (const auto& a : var.atoms())
    if (a.z.imag() > 0 && std::abs(a.z) > r0) rep.sum += a.mass * a.z.imag() / std::norm(a.z);
  return rep;
}

BlaschkeReport blaschke_sector(const AtomicCharge& nu, const Sector& sec, double r0) {
  if (!(r0 > 0)) fail(ErrorCode::InvalidArgument, "r0 must be positive");
  BlaschkeReport rep;
  const AtomicCharge var = nu.variation();
  for (const auto& a : var.atoms()) {
    if (!sec.contains(a.z) || std::abs(a.z) <= r0) continue;
    const Complex w = reduce_to_halfplane(sec, a.z);
    rep.sum += a.mass * w.imag() / std::norm(w);
  }
  return rep;
}

SystemBlaschkeReport blaschke_outside_system(const AtomicCharge& nu, const RaySystem& s, double r0) {
  SystemBlaschkeReport rep;
  for (const auto& sec : s.complementary_sectors()) rep.sectors.push_back({sec, blaschke_sector(nu, sec, r0).sum});
  return rep;
}

TrendReport blaschke_halfplane_trend(const AtomGenerator& gen, std::size_t n_max, double r0) {
  if (n_max < 2) fail(ErrorCode::InvalidArgument, "trend needs at least two atoms");
  std::vector<double> radii, values;
  double sum = 0, rmax = 0;
  std::size_t next = 1;
  for (std::size_t k = 1; k <= n_max; ++k) {
    const Atom a = gen(k);
    rmax = std::max(rmax, std::abs(a.z));
    if (a.z.imag() > 0 && std::abs(a.z) > r0) sum += std::abs(a.mass) * a.z.imag() / std::norm(a.z);
    if (k == next || k == n_max) {
      radii.push_back(rmax);
      values.push_back(sum);
      next = std::max(next + 1, static_cast<std::size_t>(std::ceil(next * 1.25)));
    }
  }
  return log_trend(std::move(radii), std::move(values));
}

Complex lindelof_sum(const AtomicCharge& nu, int q, double r0, double r) {
  if (q < 1) fail(ErrorCode::InvalidArgument, "Lindelof sums need q >= 1");
  if (!(0 < r0 && r0 < r)) fail(ErrorCode::InvalidArgument, "Lindelof sums need 0 < r0 < r");
  Complex s = 0;
  for (const auto& a : nu.atoms()) {
    const double m = std::abs(a.z);
    if (m > r0 && m <= r) s += a.mass / std::pow(a.z, q);
  }
  return s;
}

TrendReport lindelof_trend(const AtomicCharge& nu, int q, double r0, const std::vector<double>& radii) {
  std::vector<double> values;
  for (double r : radii) values.push_back(std::abs(lindelof_sum(nu, q, r0, r)));
  return log_trend(radii, std::move(values));
}

}  // namespace balayage
