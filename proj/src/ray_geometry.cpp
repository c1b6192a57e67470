#include "balayage/ray_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "balayage/errors.hpp"

namespace balayage {

double normalize_angle(double theta) {
  if (!std::isfinite(theta)) fail(ErrorCode::InvalidArgument, "non-finite angle");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

namespace {

double angular_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

}  // namespace

Sector::Sector(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    fail(ErrorCode::InvalidArgument, "non-finite sector edge");
  const double ap = beta - alpha;
  if (!(ap > 0) || ap > kTwoPi + kAngularTolerance) {
    std::ostringstream os;
    os << "sector aperture " << ap << " outside (0, 2pi]";
    fail(ErrorCode::InvalidArgument, os.str());
  }
}

double Sector::relative_angle(Complex z) const { return normalize_angle(std::arg(z) - alpha_); }

bool Sector::contains(Complex z) const {
  if (z == Complex(0, 0)) return false;
  const double phi = relative_angle(z);
  return phi > kAngularTolerance && phi < aperture() - kAngularTolerance &&
         phi < kTwoPi - kAngularTolerance;
}

Complex Sector::edge_point(Edge e, double t) const { return std::polar(t, edge_angle(e)); }

Complex reduce_to_halfplane(const Sector& sec, Complex z) {
  if (z == Complex(0, 0)) fail(ErrorCode::ZeroPoint, "reduction of the origin");
  const double k = sec.exponent();
  double phi = sec.relative_angle(z);
  const double rho = std::pow(std::abs(z), k);
  if (phi > kTwoPi - kAngularTolerance) phi = 0.0;
  if (phi <= kAngularTolerance) return {rho, 0.0};
  if (std::abs(phi - sec.aperture()) <= kAngularTolerance) return {-rho, 0.0};
  if (phi > sec.aperture()) fail(ErrorCode::InvalidArgument, "point outside the closed sector");
  const double psi = k * phi;
  return {rho * std::cos(psi), rho * std::sin(psi)};
}

double reduce_edge_radius(const Sector& sec, Edge e, double t) {
  if (t < 0) fail(ErrorCode::InvalidArgument, "negative edge radius");
  const double s = std::isinf(t) ? t : std::pow(t, sec.exponent());
  return e == Edge::Alpha ? s : -s;
}

RaySystem::RaySystem(std::vector<double> thetas) {
  if (thetas.empty()) fail(ErrorCode::InvalidArgument, "ray system needs at least one ray");
  for (double& t : thetas) t = normalize_angle(t);
  std::sort(thetas.begin(), thetas.end());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const std::size_t j = (i + 1) % thetas.size();
    if (j != i && angular_distance(thetas[i], thetas[j]) <= kAngularTolerance)
      fail(ErrorCode::InvalidArgument, "duplicate ray angle");
  }
  thetas_ = std::move(thetas);
}

RaySystem RaySystem::real_axis() { return RaySystem({0.0, kPi}); }

bool RaySystem::is_real_axis() const {
  return thetas_.size() == 2 && thetas_[0] == 0.0 && std::abs(thetas_[1] - kPi) <= kAngularTolerance;
}

Sector RaySystem::sector(std::size_t j) const {
  const std::size_t n = thetas_.size();
  if (j >= n) fail(ErrorCode::InvalidArgument, "sector index out of range");
  const double a = thetas_[j];
  const double b = (j + 1 < n) ? thetas_[j + 1] : thetas_[0] + kTwoPi;
  return Sector(a, b);
}

std::vector<Sector> RaySystem::complementary_sectors() const {
  std::vector<Sector> out;
  for (std::size_t j = 0; j < thetas_.size(); ++j) out.push_back(sector(j));
  return out;
}

std::optional<std::size_t> RaySystem::ray_at_angle(double theta) const {
  for (std::size_t j = 0; j < thetas_.size(); ++j)
    if (angular_distance(thetas_[j], theta) <= kAngularTolerance) return j;
  return std::nullopt;
}

std::optional<std::size_t> RaySystem::ray_of(Complex z) const {
  if (z == Complex(0, 0)) return std::nullopt;
  return ray_at_angle(std::arg(z));
}

PointLocation RaySystem::classify(Complex z) const {
  if (z == Complex(0, 0)) return OnSystem{std::nullopt};
  if (auto j = ray_of(z)) return OnSystem{*j};
  const double theta = normalize_angle(std::arg(z));
  const std::size_t n = thetas_.size();
  // Largest ray angle below theta, wrapping to the last ray.
  std::size_t j = n - 1;
  for (std::size_t i = 0; i < n; ++i)
    if (thetas_[i] < theta) j = i;
  return InSector{j, sector(j)};
}

std::vector<Sector> complementary_sectors(const RaySystem& s) { return s.complementary_sectors(); }
PointLocation classify_point(const RaySystem& s, Complex z) { return s.classify(z); }

}  // namespace balayage
