#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace balayage {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kAngularTolerance = 1e-12;

// Angle mapped to [0, 2pi).
double normalize_angle(double theta);

enum class Edge { Alpha, Beta };

// Open angle {alpha < arg z < beta}; beta may exceed 2pi so that the aperture is beta - alpha.
class Sector {
 public:
  Sector(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double aperture() const noexcept { return beta_ - alpha_; }
  // pi / aperture
  double exponent() const noexcept { return kPi / aperture(); }

  // arg z - alpha in [0, 2pi).
  double relative_angle(Complex z) const;
  bool contains(Complex z) const;  // open sector, angular tolerance applied at the edges
  double edge_angle(Edge e) const noexcept { return e == Edge::Alpha ? alpha_ : beta_; }
  Complex edge_point(Edge e, double t) const;

  bool operator==(const Sector& o) const noexcept { return alpha_ == o.alpha_ && beta_ == o.beta_; }

 private:
  double alpha_;
  double beta_;
};

// z' = (z e^{-i alpha})^{pi/(beta-alpha)}, branch positive on the alpha edge.
// Edge alpha lands on R+, edge beta on R-. Throws ZeroPoint for z = 0 and InvalidArgument outside the closed sector.
Complex reduce_to_halfplane(const Sector& sec, Complex z);

// Image of the radius t on an edge: t^k on R+ for alpha, -t^k for beta.
double reduce_edge_radius(const Sector& sec, Edge e, double t);

struct OnSystem {
  std::optional<std::size_t> ray;  // empty at the origin
};
struct InSector {
  std::size_t index;
  Sector sector;
};
using PointLocation = std::variant<OnSystem, InSector>;

class RaySystem {
 public:
  explicit RaySystem(std::vector<double> thetas);
  static RaySystem real_axis();

  std::size_t size() const noexcept { return thetas_.size(); }
  double theta(std::size_t j) const { return thetas_.at(j); }
  const std::vector<double>& thetas() const noexcept { return thetas_; }
  bool is_real_axis() const;

  // Sector j runs from ray j to ray j+1 (cyclically); one ray gives aperture 2pi.
  Sector sector(std::size_t j) const;
  std::vector<Sector> complementary_sectors() const;

  std::optional<std::size_t> ray_of(Complex z) const;
  // Index of the ray at angle theta (within tolerance), if any.
  std::optional<std::size_t> ray_at_angle(double theta) const;
  PointLocation classify(Complex z) const;
  bool contains(Complex z) const { return std::holds_alternative<OnSystem>(classify(z)); }

 private:
  std::vector<double> thetas_;
};

std::vector<Sector> complementary_sectors(const RaySystem& s);
PointLocation classify_point(const RaySystem& s, Complex z);

}  // namespace balayage
