#include "balayage/subharmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "balayage/errors.hpp"
#include "balayage/quadrature.hpp"

namespace balayage {

double kernel_Kq(Complex zeta, Complex z, int q) {
  if (q < -1) fail(ErrorCode::InvalidArgument, "genus must be >= -1");
  if (zeta == z) fail(ErrorCode::CoincidentPoints, "kernel evaluated at its pole");
  if (q == -1) return std::log(std::abs(zeta - z));
  if (zeta == Complex(0)) fail(ErrorCode::ZeroCenter, "kernel of nonnegative genus centered at 0");
  const Complex u = z / zeta;
  double s = std::log(std::abs(1.0 - u));
  Complex uj = 1.0;
  for (int j = 1; j <= q; ++j) {
    uj *= u;
    s += uj.real() / j;
  }
  return s;
}

double kernel_Kq_radial_derivative(Complex z, double t, int q) {
  if (!(t > 0)) fail(ErrorCode::InvalidArgument, "t must be positive");
  if (q < -1) fail(ErrorCode::InvalidArgument, "genus must be >= -1");
  if (z == Complex(t)) fail(ErrorCode::Singularity, "derivative at the pole");
  return (std::pow(z / t, q + 1) / (t - z)).real();
}

GenusSchedule::GenusSchedule(std::vector<double> radii, std::vector<int> genera)
    : radii_(std::move(radii)), genera_(std::move(genera)) {
  if (radii_.empty() || radii_.size() != genera_.size())
    fail(ErrorCode::InvalidArgument, "schedule needs matching nonempty radii and genera");
  if (radii_[0] != 0 || genera_[0] != -1) fail(ErrorCode::InvalidArgument, "schedule must start with genus -1 at 0");
  if (radii_.size() > 1 && radii_[1] < 1) fail(ErrorCode::InvalidArgument, "genus must stay -1 on [0, 1)");
  for (std::size_t i = 1; i < radii_.size(); ++i) {
    if (!(radii_[i] > radii_[i - 1]) || !std::isfinite(radii_[i]))
      fail(ErrorCode::InvalidArgument, "schedule radii must increase");
    if (genera_[i] < genera_[i - 1]) fail(ErrorCode::InvalidArgument, "schedule genera must not decrease");
  }
}

GenusSchedule GenusSchedule::fixed(int q) {
  if (q < -1) fail(ErrorCode::InvalidArgument, "genus must be >= -1");
  GenusSchedule s;
  s.radii_ = {0.0};
  s.genera_ = {q};
  return s;
}

int GenusSchedule::genus(double t) const {
  const auto it = std::upper_bound(radii_.begin(), radii_.end(), t);
  return genera_[static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - radii_.begin() - 1, 0))];
}

double schedule_series(const AtomicCharge& nu, const GenusSchedule& s, double x0) {
  double sum = 0;
  for (const auto& a : nu.atoms()) {
    const double r = std::abs(a.z);
    const int q = s.genus(r);
    if (q >= 0) sum += std::abs(a.mass) * std::pow(x0 / r, q + 1);
  }
  return sum;
}

double HarmonicPolynomial::operator()(Complex z) const {
  Complex s = 0, zk = 1;
  for (const Complex& c : coefficients) {
    s += c * zk;
    zk *= z;
  }
  return s.real();
}

CanonicalPotential::CanonicalPotential(AtomicCharge charge, GenusSchedule schedule, HarmonicPolynomial harmonic)
    : charge_(charge.merged()), schedule_(std::move(schedule)), harmonic_(std::move(harmonic)) {
  for (const auto& a : charge_.atoms())
    if (a.z == Complex(0) && schedule_.genus(0) >= 0)
      fail(ErrorCode::ZeroCenter, "atom at 0 needs genus -1");
}

CanonicalPotential::CanonicalPotential(AtomicCharge charge, int q, HarmonicPolynomial harmonic)
    : CanonicalPotential(std::move(charge), GenusSchedule::fixed(q), std::move(harmonic)) {}

ExtendedReal CanonicalPotential::operator()(Complex z) const {
  double s = harmonic_(z);
  bool bottom = false;
  for (const auto& a : charge_.atoms()) {
    if (a.z == z) {
      if (a.mass < 0) fail(ErrorCode::Singularity, "potential is +inf at a negative atom");
      bottom = true;
      continue;
    }
    s += a.mass * kernel_Kq(a.z, z, schedule_.genus(std::abs(a.z)));
  }
  return bottom ? ExtendedReal::bottom() : ExtendedReal(s);
}

Evaluable CanonicalPotential::evaluable() const {
  return [p = *this](Complex z) { return p(z).value_or(-std::numeric_limits<double>::infinity()); };
}

ExtendedReal potential_eval(const CanonicalPotential& p, Complex z) { return p(z); }

namespace {

constexpr double kGoldenFraction = 0.6180339887498949;

double trapezoid(const Evaluable& v, double r, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i) s += v(std::polar(r, kTwoPi * (i + kGoldenFraction) / n));
  return s / n;
}

}  // namespace

double circle_mean(const Evaluable& v, double r, const CircleMeanOptions& o) {
  if (!(r > 0)) fail(ErrorCode::InvalidArgument, "radius must be positive");
  int n = std::max(o.initial_nodes, 4);
  double tn = trapezoid(v, r, n);
  double prev = std::numeric_limits<double>::quiet_NaN();
  while (2 * n <= o.max_nodes) {
    const double t2n = trapezoid(v, r, 2 * n);
    const double rich = (4 * t2n - tn) / 3;
    if (!std::isfinite(rich)) fail(ErrorCode::QuadratureFailure, "circle mean hit a singular node");
    if (std::abs(rich - prev) <= o.tol * std::max(1.0, std::abs(rich))) return rich;
    prev = rich;
    tn = t2n;
    n *= 2;
  }
  // Log singularities on the circle spoil the trapezoid rate; fall back to adaptive bisection in theta.
  QuadratureOptions q;
  q.abs_tol = o.tol;
  q.rel_tol = o.tol;
  q.max_intervals = 200000;
  const double phase = kTwoPi * kGoldenFraction / o.initial_nodes;
  return integral([&](double th) { return v(std::polar(r, th + phase)); }, 0, kTwoPi, q) / kTwoPi;
}

Hints hints_for(const AtomicCharge& nu) {
  Hints h;
  for (const auto& a : nu.atoms()) {
    if (a.z == Complex(0)) continue;
    h.radii.push_back(std::abs(a.z));
    h.angles.push_back(std::arg(a.z));
  }
  return h;
}

namespace {

QuadratureOptions fine() {
  QuadratureOptions o;
  o.abs_tol = 1e-11;
  o.max_intervals = 200000;
  return o;
}

std::vector<double> angles_in(const Hints& h, double alpha) {
  std::vector<double> out;
  for (double th : h.angles) out.push_back(alpha + normalize_angle(th - alpha));
  return out;
}

void check_aperture(double alpha, double beta, double r0, double r) {
  if (!(beta > alpha) || beta - alpha > kTwoPi + kAngularTolerance)
    fail(ErrorCode::InvalidArgument, "aperture must lie in (0, 2pi]");
  if (!(0 < r0 && r0 < r)) fail(ErrorCode::InvalidArgument, "needs 0 < r0 < r");
}

}  // namespace

ClassAFunctionals class_A_functionals(const Evaluable& v, double alpha, double beta, double r0, double r,
                                      const Hints& hints) {
  check_aperture(alpha, beta, r0, r);
  const double w = beta - alpha;
  const double k = kPi / w;
  const auto V = [&](double t) { return v(std::polar(t, alpha)) + v(std::polar(t, beta)); };
  const QuadratureOptions o = fine();
  const double r2k = std::pow(r, 2 * k);
  ClassAFunctionals f;
  f.A = integral([&](double t) { return (std::pow(t, -k) - std::pow(t, k) / r2k) * V(t) / t; }, r0, r, o,
                 hints.radii) /
        (2 * w);
  f.J = integral([&](double t) { return V(t) / std::pow(t, k + 1); }, r0, r, o, hints.radii);
  const double upper = integral([&](double t) { return V(t) * std::pow(t, k - 1); }, r0, r, o, hints.radii);
  f.A_from_J = (f.J - upper / r2k) / (2 * w);
  QuadratureOptions inner = o;
  inner.abs_tol = 1e-13;
  const auto Jt = [&](double t) {
    std::vector<double> cuts;
    for (double h : hints.radii)
      if (h > r0 && h < t) cuts.push_back(h);
    return integral([&](double s) { return V(s) / std::pow(s, k + 1); }, r0, t, inner, cuts);
  };
  f.A_from_nested = kPi / (w * w * r2k) * integral([&](double t) { return Jt(t) * std::pow(t, 2 * k - 1); }, r0, r, o);
  f.B = integral([&](double th) { return v(std::polar(r, th)) * std::sin(kPi * (th - alpha) / w); }, alpha, beta, o,
                 angles_in(hints, alpha)) /
        (w * std::pow(r, k));
  return f;
}

TrendReport class_A_sweep(const Evaluable& v, double alpha, double beta, double r0, const std::vector<double>& radii,
                          const Hints& hints) {
  std::vector<double> values;
  for (double r : radii) {
    check_aperture(alpha, beta, r0, r);
    const double w = beta - alpha;
    const double k = kPi / w;
    const QuadratureOptions o = fine();
    const double r2k = std::pow(r, 2 * k);
    const double A = integral(
                         [&](double t) {
                           return (std::pow(t, -k) - std::pow(t, k) / r2k) *
                                  (v(std::polar(t, alpha)) + v(std::polar(t, beta))) / t;
                         },
                         r0, r, o, hints.radii) /
                     (2 * w);
    const double B =
        integral([&](double th) { return v(std::polar(r, th)) * std::sin(kPi * (th - alpha) / w); }, alpha, beta, o,
                 angles_in(hints, alpha)) /
        (w * std::pow(r, k));
    values.push_back(A + B);
  }
  return log_trend(radii, values);
}

CarlemanReport carleman_check(const AtomicCharge& nu, double r0, double r, const HarmonicPolynomial& h) {
  if (!(0 < r0 && r0 < r)) fail(ErrorCode::InvalidArgument, "needs 0 < r0 < r");
  CarlemanReport c;
  const double inner_weight = 1 / (r0 * r0) - 1 / (r * r);
  for (const auto& a : nu.atoms()) {
    if (a.z.imag() < 0) fail(ErrorCode::NotInUpperHalfPlane, "carleman check needs atoms in the upper half-plane");
    const double m = std::abs(a.z);
    if (std::abs(m - r0) <= 1e-12 * r0 || std::abs(m - r) <= 1e-12 * r)
      fail(ErrorCode::AtomOnCircle, "atom on a boundary circle");
    if (m > r0 && m <= r)
      c.lhs += a.mass * (a.z.imag() / (m * m) - a.z.imag() / (r * r));
    else if (m <= r0)
      c.lhs += a.mass * inner_weight * a.z.imag();
  }
  const CanonicalPotential pot(nu, -1, h);
  const Evaluable v = pot.evaluable();
  Hints hints = hints_for(nu);
  const ClassAFunctionals f = class_A_functionals(v, 0, kPi, r0, r, hints);
  c.A = f.A;
  c.B = f.B;
  std::vector<double> cuts;
  for (const auto& a : nu.atoms()) cuts.push_back(std::abs(a.z.real()));
  const QuadratureOptions o = fine();
  c.inner_correction =
      inner_weight / kTwoPi * integral([&](double t) { return v(Complex(t)) + v(Complex(-t)); }, 0, r0, o, cuts);
  c.circle_correction = -integral([&](double th) { return v(std::polar(r0, th)) * std::sin(th); }, 0, kPi, o,
                                  angles_in(hints, 0)) /
                        (kPi * r0);
  c.rhs = c.A + c.B + c.inner_correction + c.circle_correction;
  c.residual = std::abs(c.lhs - c.rhs);
  return c;
}

SweptValue subharmonic_balayage_eval(const Evaluable& v, const RaySystem& s, Complex z, const SweepOptions& o,
                                     const Hints& hints) {
  if (!(o.reduced_cutoff > 0)) fail(ErrorCode::InvalidArgument, "cutoff must be positive");
  const PointLocation loc = s.classify(z);
  SweptValue out;
  if (std::holds_alternative<OnSystem>(loc)) {
    out.value = v(z);
    return out;
  }
  const Sector sec = std::get<InSector>(loc).sector;
  const double k = sec.exponent();
  const Complex w = reduce_to_halfplane(sec, z);
  const double R = o.reduced_cutoff;
  const auto edge = [&](double u) {
    return u >= 0 ? sec.edge_point(Edge::Alpha, std::pow(u, 1 / k)) : sec.edge_point(Edge::Beta, std::pow(-u, 1 / k));
  };
  const auto phi_of = [&](double u) { return std::atan((u - w.real()) / w.imag()); };
  std::vector<double> cuts{phi_of(0.0)};
  for (double rho : hints.radii) {
    cuts.push_back(phi_of(std::pow(rho, k)));
    cuts.push_back(phi_of(-std::pow(rho, k)));
  }
  out.tail_estimate = w.imag() / kPi * (std::abs(v(edge(R))) + std::abs(v(edge(-R)))) * 2 / R;
  if (!(out.tail_estimate <= o.tol)) fail(ErrorCode::TailTooLarge, "truncated tail above tolerance");
  QuadratureOptions q;
  q.abs_tol = o.quad_tol;
  q.max_intervals = 400000;
  const double value = integral([&](double phi) { return v(edge(w.real() + w.imag() * std::tan(phi))); }, phi_of(-R),
                                phi_of(R), q, cuts);
  out.value = value / kPi;
  return out;
}

}  // namespace balayage
