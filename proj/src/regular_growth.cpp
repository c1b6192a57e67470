#include "balayage/regular_growth.hpp"

#include <algorithm>
#include <cmath>

#include "balayage/errors.hpp"
#include "balayage/quadrature.hpp"
#include "balayage/trend.hpp"

namespace balayage {

double indicator_estimate(const Evaluable& v, double theta, double p, double r_lo, double r_hi, int per_octave) {
  if (!(p > 0)) fail(ErrorCode::InvalidArgument, "p must be positive");
  double best = -INFINITY;
  for (double r : dyadic_grid(r_lo, r_hi, per_octave)) best = std::max(best, v(std::polar(r, theta)) / std::pow(r, p));
  return best;
}

double kernel_stieltjes(const StepFunction& n, int q, Complex z, double lower) {
  if (q < 0) fail(ErrorCode::InvalidArgument, "genus must be >= 0");
  if (!(lower >= 0)) fail(ErrorCode::InvalidArgument, "lower limit must be >= 0");
  double s = 0;
  if (lower > 0) {
    const double n0 = n(lower);
    if (n0 != 0) s += n0 * kernel_Kq(lower, z, q);
  } else if (n(0.0) != 0) {
    fail(ErrorCode::InvalidArgument, "counting function must vanish at 0");
  }
  const auto& x = n.points();
  const auto& h = n.sizes();
  for (std::size_t i = std::upper_bound(x.begin(), x.end(), lower) - x.begin(); i < x.size(); ++i)
    s += h[i] * kernel_Kq(x[i], z, q);
  return s;
}

namespace {

// Kernel integral over the pieces of n from lower, with (cut_lo, cut_hi) removed.
double piecewise_integral(const StepFunction& n, int q, Complex z, double lower, double cut_lo, double cut_hi) {
  const auto f = [&](double t) { return -kernel_Kq_radial_derivative(z, t, q); };
  QuadratureOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-13;
  o.max_intervals = 200000;
  std::vector<double> starts{lower};
  for (double x : n.points())
    if (x > lower) starts.push_back(x);
  std::vector<double> cuts;
  const double re = z.real(), im = std::abs(z.imag());
  for (double c : {re - im, re, re + im, re - 10 * im, re + 10 * im})
    if (c > 0) cuts.push_back(c);
  if (cut_hi > cut_lo) {
    const double w = cut_hi - cut_lo;
    for (double c : {cut_lo - w, cut_lo - 4 * w, cut_hi + w, cut_hi + 4 * w}) cuts.push_back(c);
  }
  auto piece = [&](double a, double b) {
    if (!(a < b)) return 0.0;
    std::vector<double> inside;
    for (double c : cuts)
      if (c > a && c < b) inside.push_back(c);
    return integral(f, a, b, o, inside);
  };
  double s = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const double a = starts[i];
    const double b = i + 1 < starts.size() ? starts[i + 1] : INFINITY;
    const double c = n(a);
    if (c == 0) continue;
    if (cut_hi > cut_lo && cut_lo < b && cut_hi > a)
      s += c * (piece(a, std::min(b, cut_lo)) + piece(std::max(a, cut_hi), b));
    else
      s += c * piece(a, b);
  }
  return s;
}

}  // namespace

PVReport pv_kernel_report(const StepFunction& n, int q, Complex z, double epsilon, double lower, double tol) {
  if (q < 0) fail(ErrorCode::InvalidArgument, "genus must be >= 0");
  if (!(epsilon > 0) || !(lower >= 0)) fail(ErrorCode::InvalidArgument, "needs epsilon > 0 and lower >= 0");
  if (lower == 0 && n(0.0) != 0) fail(ErrorCode::InvalidArgument, "counting function must vanish at 0");
  PVReport rep;
  const double x = z.real();
  if (z.imag() != 0 || x <= lower) {
    if (z == Complex(lower) && lower > 0) fail(ErrorCode::SingularityUnresolved, "pole at the lower limit");
    rep.value = piecewise_integral(n, q, z, lower, 0, 0);
    return rep;
  }
  double gap = x - lower;
  for (double t : n.points()) gap = std::min(gap, std::abs(t - x));
  if (gap == 0) fail(ErrorCode::SingularityUnresolved, "jump of the counting function at the pole");
  double eps = std::min(epsilon, gap / 4);
  for (int i = 0; i < 4; ++i, eps /= 2) {
    rep.epsilons.push_back(eps);
    rep.excised.push_back(piecewise_integral(n, q, z, lower, x - eps, x + eps));
  }
  // The excision error is odd in eps: first eliminate the linear term, then the cubic one.
  const double r1a = 2 * rep.excised[2] - rep.excised[1];
  const double r1b = 2 * rep.excised[3] - rep.excised[2];
  const double r2 = (8 * r1b - r1a) / 7;
  rep.richardson_gap = std::abs(r2 - r1b);
  if (!(rep.richardson_gap <= tol)) fail(ErrorCode::SingularityUnresolved, "excision limit did not settle");
  rep.value = r2;
  return rep;
}

double pv_kernel_integral(const StepFunction& n, int q, Complex z, double epsilon, double lower) {
  return pv_kernel_report(n, q, z, epsilon, lower).value;
}

std::vector<StepFunction> ray_counting(const AtomicCharge& nu, const RaySystem& s) {
  std::vector<std::vector<std::pair<double, double>>> jumps(s.size());
  for (const auto& a : nu.atoms()) {
    if (a.z == Complex(0)) {
      jumps[0].emplace_back(0.0, a.mass);
      continue;
    }
    const auto ray = s.ray_of(a.z);
    if (!ray) fail(ErrorCode::SupportOffAxis, "atom off the ray system");
    jumps[*ray].emplace_back(std::abs(a.z), a.mass);
  }
  std::vector<StepFunction> out;
  for (auto& j : jumps) out.emplace_back(std::move(j));
  return out;
}

std::vector<StepFunction> sampled_ray_counting(const BalayageCharge& bal, double t_max, std::size_t cells) {
  if (!(t_max > 0) || cells < 1) fail(ErrorCode::InvalidArgument, "sampling needs t_max > 0 and cells >= 1");
  std::vector<StepFunction> out;
  for (std::size_t j = 0; j < bal.rays().size(); ++j) {
    const RadialDistribution d = bal.ray_distribution(j);
    std::vector<double> ts;
    for (std::size_t i = 0; i <= cells; ++i) ts.push_back(t_max * static_cast<double>(i) / cells);
    for (double b : d.breakpoints)
      if (b > 0 && b < t_max) ts.push_back(b);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<std::pair<double, double>> jumps;
    double prev = 0;
    for (double t : ts) {
      const double v = d.value(t);
      jumps.emplace_back(t, v - prev);
      prev = v;
    }
    out.emplace_back(std::move(jumps));
  }
  return out;
}

std::vector<double> jittered_grid(double r_lo, double r_hi, int per_octave) {
  if (!(0 < r_lo && r_lo < r_hi) || per_octave < 1) fail(ErrorCode::InvalidArgument, "bad radius window");
  std::vector<double> g;
  for (int i = 0;; ++i) {
    const double u = std::fmod((i + 1) * 0.6180339887498949, 1.0);
    const double r = r_lo * std::exp2((i + u) / per_octave);
    if (r > r_hi) break;
    g.push_back(r);
  }
  return g;
}

double crg_value(const RaySystem& s, const std::vector<StepFunction>& n, double p, std::size_t j, double r) {
  if (n.size() != s.size()) fail(ErrorCode::InvalidArgument, "one counting function per ray");
  const int q = static_cast<int>(std::floor(p));
  double sum = 0;
  for (std::size_t jp = 0; jp < s.size(); ++jp)
    sum += kernel_stieltjes(n[jp], q, std::polar(r, s.theta(j) - s.theta(jp)), 1.0);
  return sum / std::pow(r, p);
}

namespace {

void settle(RayLimit& ray, double tol) {
  ray.limit = median(ray.values);
  std::size_t outliers = 0;
  for (double v : ray.values) {
    const double res = std::abs(v - ray.limit);
    if (res > tol)
      ++outliers;
    else
      ray.spread = std::max(ray.spread, res);
  }
  ray.exceptional_density = ray.values.empty() ? 0.0 : static_cast<double>(outliers) / ray.values.size();
  ray.stable = ray.exceptional_density <= kExceptionalFraction;
}

template <typename F>
CRGReport crg_sweep(const RaySystem& s, double p, double r_lo, double r_hi, double tol, int per_octave, F value) {
  CRGReport rep;
  rep.p = p;
  rep.window_lo = r_lo;
  rep.window_hi = r_hi;
  const std::vector<double> radii = jittered_grid(r_lo, r_hi, per_octave);
  rep.stable = true;
  for (std::size_t j = 0; j < s.size(); ++j) {
    RayLimit ray;
    ray.ray = j;
    ray.theta = s.theta(j);
    ray.radii = radii;
    for (double r : radii) ray.values.push_back(value(j, r));
    settle(ray, tol);
    rep.stable = rep.stable && ray.stable;
    rep.rays.push_back(std::move(ray));
  }
  return rep;
}

}  // namespace

CRGReport crg_on_rays(const RaySystem& s, const std::vector<StepFunction>& n, double p, double r_lo, double r_hi,
                      double tol, int per_octave) {
  if (!(p > 0)) fail(ErrorCode::InvalidArgument, "p must be positive");
  if (n.size() != s.size()) fail(ErrorCode::InvalidArgument, "one counting function per ray");
  return crg_sweep(s, p, r_lo, r_hi, tol, per_octave,
                   [&](std::size_t j, double r) { return crg_value(s, n, p, j, r); });
}

CRGReport crg_small_p(const RaySystem& s, const std::vector<StepFunction>& n, double p, double r_lo, double r_hi,
                      double tol, int per_octave) {
  if (!(p > 0 && p < 1)) fail(ErrorCode::InvalidArgument, "small-p route needs 0 < p < 1");
  if (n.size() != s.size()) fail(ErrorCode::InvalidArgument, "one counting function per ray");
  return crg_sweep(s, p, r_lo, r_hi, tol, per_octave,
                   [&](std::size_t j, double r) { return n[j](r) / std::pow(r, p); });
}

std::array<double, 4> exgr2_b(const std::array<RadialFunction, 4>& n, double t) {
  if (!(t > 0)) fail(ErrorCode::InvalidArgument, "t must be positive");
  QuadratureOptions o;
  o.abs_tol = 1e-12;
  o.max_intervals = 100000;
  std::array<double, 4> b{};
  for (int k = 0; k < 4; ++k) {
    const auto& a = n[k];
    const auto& c = n[(k + 1) % 4];
    b[k] = 2 * integral([&](double s) { return (a(s) + c(s)) * s / (s * s * s * s + t * t); }, 0, INFINITY, o,
                        {std::sqrt(t)});
  }
  return b;
}

namespace {

// int_0^inf f(s) s / (s^4 + t^2) ds for a step function f, in closed form.
double step_weight(const StepFunction& f, double t) {
  const auto tail = [t](double s) { return (kPi / 2 - std::atan(s * s / t)) / (2 * t); };
  double v = f.base() * tail(0);
  for (std::size_t i = 0; i < f.points().size(); ++i) v += f.sizes()[i] * tail(f.points()[i]);
  return v;
}

}  // namespace

std::array<double, 4> exgr2_b(const std::array<StepFunction, 4>& n, double t) {
  if (!(t > 0)) fail(ErrorCode::InvalidArgument, "t must be positive");
  std::array<double, 4> w{};
  for (int k = 0; k < 4; ++k) w[k] = step_weight(n[k], t);
  std::array<double, 4> b{};
  for (int k = 0; k < 4; ++k) b[k] = 2 * (w[k] + w[(k + 1) % 4]);
  return b;
}

Exgr2Report exgr2_functionals(const std::array<StepFunction, 4>& n, const std::vector<double>& ts,
                              const std::vector<double>& radii) {
  Exgr2Report rep;
  rep.ts = ts;
  for (double t : ts) rep.b.push_back(exgr2_b(n, t));
  rep.radii = radii;
  const Complex unit[4] = {Complex(0, 1), Complex(-1, 0), Complex(0, -1), Complex(1, 0)};
  const auto g = [&](double t, bool imag) {
    const auto b = exgr2_b(n, t);
    Complex s = 0;
    for (int k = 0; k < 4; ++k) s += unit[k] * b[k];
    return (imag ? s.imag() : s.real()) / (2 * t);
  };
  QuadratureOptions o;
  o.abs_tol = 1e-11;
  o.max_intervals = 100000;
  Complex acc = 0;
  double prev = 1.0;
  for (double r : radii) {
    if (r < prev) fail(ErrorCode::InvalidArgument, "radii must increase from 1");
    std::vector<double> cuts;
    for (double c = 2 * prev; c < r; c *= 2) cuts.push_back(c);
    acc += Complex(integral([&](double t) { return g(t, false); }, prev, r, o, cuts),
                   integral([&](double t) { return g(t, true); }, prev, r, o, cuts));
    prev = r;
    rep.L.push_back(acc);
  }
  return rep;
}

AngularDensity angular_density(const AtomicCharge& nu, double alpha, double beta, double p,
                               const std::vector<double>& radii) {
  if (!(p > 0) || !(beta > alpha)) fail(ErrorCode::InvalidArgument, "needs p > 0 and alpha < beta");
  const double w = beta - alpha;
  const AtomicCharge part = nu.restricted([&](Complex z) {
    if (z == Complex(0) || w >= kTwoPi - kAngularTolerance) return true;
    const double rel = normalize_angle(std::arg(z) - alpha);
    return rel <= w + kAngularTolerance || rel >= kTwoPi - kAngularTolerance;
  });
  const StepFunction count = radial_counting(part);
  AngularDensity d;
  d.radii = radii;
  for (double r : radii) d.ratios.push_back(count(r) / std::pow(r, p));
  std::vector<double> upper(d.ratios.begin() + static_cast<std::ptrdiff_t>(d.ratios.size() / 2), d.ratios.end());
  d.limit = median(upper);
  if (p == std::floor(p))
    for (double r : radii) d.lindelof.push_back(r > 1 ? lindelof_sum(part, static_cast<int>(p), 1.0, r) : Complex(0));
  return d;
}

}  // namespace balayage
