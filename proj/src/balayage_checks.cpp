#include "balayage/balayage_checks.hpp"

#include <algorithm>
#include <cmath>

#include "balayage/errors.hpp"
#include "balayage/harmonic_measure.hpp"
#include "balayage/quadrature.hpp"

namespace balayage {

namespace {

AtomicCharge closed_upper_variation(const AtomicCharge& nu) {
  return nu.restricted([](Complex z) { return z.imag() >= 0; }).variation();
}

double far_tail(const AtomicCharge& var, double from) {
  double s = 0;
  for (const auto& a : var.atoms())
    if (std::abs(a.z) >= from) s += a.mass * std::abs(a.z.imag()) / std::norm(a.z);
  return s;
}

}  // namespace

DominanceCheck check_thcup_bound(const AtomicCharge& nu, double t1, double t2, double a) {
  if (!(t1 < t2)) fail(ErrorCode::InvalidArgument, "needs t1 < t2");
  if (t1 * t2 < 0) fail(ErrorCode::HypothesisViolated, "interval straddles the origin");
  if (!(a > 0 && a < 1)) fail(ErrorCode::InvalidArgument, "a must lie in (0,1)");
  const BalayageCharge bal = balayage_halfplane(nu);
  DominanceCheck c;
  c.lhs = bal.variation_on_R(t2) - bal.variation_on_R(t1);

  const AtomicCharge up = closed_upper_variation(nu);
  const double x0 = 0.5 * (t1 + t2);
  const double r = 0.5 * (t2 - t1);
  const double ax = std::abs(x0);
  double rhs = disk_mass(up, x0, r);
  rhs += 2 * r / (a * ax) * radial_counting(up)(3 * ax / a);
  rhs += r / ((1 - a) * (1 - a)) * far_tail(up, ax);
  const double top = a * ax;
  if (top > r) {
    double integral_term = 0;
    for (const auto& at : up.atoms()) {
      const double d = std::abs(at.z - x0);
      if (d < top) integral_term += at.mass * (1 / std::max(r, d) - 1 / top);
    }
    rhs += r * integral_term;
  }
  c.rhs = rhs;
  c.holds = c.lhs <= c.rhs + kDominanceSlack;
  return c;
}

DominanceCheck check_ges_bound(const AtomicCharge& nu, const RadiusMap& g, double r) {
  if (!(r > 0)) fail(ErrorCode::InvalidArgument, "r must be positive");
  const double gr = g(r);
  if (!(gr > r)) fail(ErrorCode::BadGauge, "radius map must satisfy g(r) > r");
  const AtomicCharge var = nu.variation();
  DominanceCheck c;
  c.lhs = balayage_halfplane(nu).radial_variation(r);
  c.rhs = radial_counting(var)(gr) + 2 * r * gr * gr / (kPi * (gr - r) * (gr - r)) * far_tail(var, gr);
  c.holds = c.lhs <= c.rhs + kDominanceSlack;
  return c;
}

TypeComparison sampled_type_comparison(const AtomicCharge& nu, double p, const std::vector<double>& radii) {
  TypeComparison t;
  t.p = p;
  const BalayageCharge bal = balayage_halfplane(nu);
  const StepFunction counting = radial_counting(nu, true);
  for (double r : radii) {
    t.balayage_sup = std::max(t.balayage_sup, bal.radial_variation(r) / std::pow(r, p));
    t.charge_sup = std::max(t.charge_sup, counting(r) / std::pow(r, p));
  }
  return t;
}

DominanceCheck check_nubrB_bound(const AtomicCharge& nu, const RaySystem& s, const RadiusMap& g, double r) {
  if (!(r > 0)) fail(ErrorCode::InvalidArgument, "r must be positive");
  const double gr = g(r);
  if (!(gr > r)) fail(ErrorCode::BadGauge, "radius map must satisfy g(r) > r");
  const AtomicCharge var = nu.variation();
  double cplus = 0;
  for (const auto& sec : s.complementary_sectors()) {
    double part = 0;
    for (const auto& a : var.atoms()) {
      if (!sec.contains(a.z) || std::abs(a.z) < gr) continue;
      const Complex w = reduce_to_halfplane(sec, a.z);
      part += a.mass * w.imag() / std::norm(w);
    }
    cplus += std::pow(r, sec.exponent()) * part;
  }
  DominanceCheck c;
  c.lhs = balayage_system(nu, s).radial_variation(r);
  c.rhs = radial_counting(var)(gr) + 8 * gr * gr / (kPi * (gr - r) * (gr - r)) * cplus;
  c.holds = c.lhs <= c.rhs + kDominanceSlack;
  return c;
}

LipschitzReport check_lipschitz(const AtomicCharge& nu, double x1, double x2, std::size_t cells) {
  if (!(x1 < x2) || x1 * x2 <= 0) fail(ErrorCode::InvalidArgument, "interval must lie on one side of 0");
  if (cells < 1) fail(ErrorCode::InvalidArgument, "grid needs at least one cell");
  for (const auto& a : nu.atoms())
    if (a.z.imag() == 0 && a.z.real() >= x1 && a.z.real() <= x2)
      fail(ErrorCode::SupportTouchesInterval, "atom on the interval");
  LipschitzReport rep;
  const BalayageCharge bal = balayage_halfplane(nu);
  const double h = (x2 - x1) / static_cast<double>(cells);
  double prev = bal.distribution_on_R(x1);
  for (std::size_t i = 1; i <= cells; ++i) {
    const double x = i == cells ? x2 : x1 + h * static_cast<double>(i);
    const double cur = bal.distribution_on_R(x);
    rep.modulus = std::max(rep.modulus, std::abs(cur - prev) / h);
    prev = cur;
  }

  const AtomicCharge up = closed_upper_variation(nu);
  // Largest separation factor with every closed disk D(x, a|x|) free of atoms, x in [x1, x2].
  double sep = 1.0;
  const std::size_t probe = 2048;
  for (const auto& at : up.atoms())
    for (std::size_t i = 0; i <= probe; ++i) {
      const double x = x1 + (x2 - x1) * static_cast<double>(i) / probe;
      sep = std::min(sep, std::abs(at.z - x) / std::abs(x));
    }
  rep.a = std::min(0.5, 0.9 * sep);
  const StepFunction count = radial_counting(up);
  const double xmin = std::min(std::abs(x1), std::abs(x2));
  const double xmax = std::max(std::abs(x1), std::abs(x2));
  double sup_term = 0;
  std::vector<double> xs{xmin, xmax};
  for (const auto& at : up.atoms()) {
    const double x = rep.a * std::abs(at.z) / 6;
    if (x > xmin && x < xmax) xs.push_back(x);
  }
  for (double x : xs) sup_term = std::max(sup_term, 2 * count(6 * x / rep.a) / x);
  rep.modulus_bound = 0.5 * (sup_term + far_tail(up, xmin) / ((1 - rep.a) * (1 - rep.a)));
  rep.holds = rep.modulus <= rep.modulus_bound + kDominanceSlack;
  return rep;
}

LipschitzGrowthReport check_lipschitz_growth(const AtomicCharge& nu, double p, double r0, double r1) {
  if (!(0 < r0 && r0 < r1)) fail(ErrorCode::InvalidArgument, "needs 0 < r0 < r1");
  LipschitzGrowthReport rep;
  rep.p = p;
  const BalayageCharge bal = balayage_halfplane(nu);
  std::vector<double> logs;
  for (double R = r0; 2 * R <= r1 * (1 + 1e-12); R *= 2) {
    double best = 0;
    for (int q = 0; q < 4; ++q) {
      const double x = R * std::exp2(q / 4.0);
      for (double sign : {1.0, -1.0}) {
        const double x0 = sign * x;
        for (double frac : {0.5, 0.125, 1.0 / 32}) {
          const double w = frac * x;
          const double dF = bal.distribution_on_R(x0 + w / 2) - bal.distribution_on_R(x0 - w / 2);
          best = std::max(best, std::abs(dF) / (w * std::pow(x, p - 1)));
        }
      }
    }
    rep.bin_radii.push_back(R);
    rep.bin_constants.push_back(best);
    logs.push_back(std::log(std::max(best, 1e-300)));
  }
  for (double b : rep.bin_constants) rep.fitted_b = std::max(rep.fitted_b, b);
  rep.slope = log_slope(rep.bin_radii, logs);
  rep.bounded = std::isfinite(rep.fitted_b) && rep.slope <= kDivergenceSlope;
  return rep;
}

RayFunction::RayFunction(std::size_t rays,
                         std::vector<std::pair<std::size_t, std::vector<std::pair<double, double>>>> knots)
    : t_(rays), v_(rays) {
  bool origin_set = false;
  for (auto& [j, pts] : knots) {
    if (j >= rays) fail(ErrorCode::InvalidArgument, "ray function on a missing ray");
    if (!t_[j].empty()) fail(ErrorCode::InvalidArgument, "ray function given twice on one ray");
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!(pts[i].first >= 0) || !std::isfinite(pts[i].first) || !std::isfinite(pts[i].second))
        fail(ErrorCode::InvalidArgument, "ray function knots need finite t >= 0");
      if (i > 0 && pts[i].first == pts[i - 1].first) fail(ErrorCode::InvalidArgument, "repeated knot");
      t_[j].push_back(pts[i].first);
      v_[j].push_back(pts[i].second);
    }
    if (pts.empty()) continue;
    if (pts.back().second != 0) fail(ErrorCode::InvalidArgument, "ray function must vanish at its last knot");
    if (pts.front().first > 0 && pts.front().second != 0)
      fail(ErrorCode::InvalidArgument, "ray function must vanish at its first knot");
    if (pts.front().first == 0) {
      if (origin_set && origin_ != pts.front().second)
        fail(ErrorCode::InvalidArgument, "ray function discontinuous at the origin");
      origin_ = pts.front().second;
      origin_set = true;
    }
  }
  if (origin_ != 0)
    for (std::size_t j = 0; j < rays; ++j)
      if (t_[j].empty() || t_[j].front() != 0)
        fail(ErrorCode::InvalidArgument, "ray function discontinuous at the origin");
}

double RayFunction::on_ray(std::size_t j, double t) const {
  const auto& ts = t_.at(j);
  const auto& vs = v_.at(j);
  if (ts.empty() || t < ts.front() || t > ts.back()) return 0.0;
  const auto it = std::upper_bound(ts.begin(), ts.end(), t);
  if (it == ts.end()) return vs.back();
  const std::size_t i = static_cast<std::size_t>(it - ts.begin());
  const double w = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
  return vs[i - 1] + w * (vs[i] - vs[i - 1]);
}

double RayFunction::support_end(std::size_t j) const { return t_.at(j).empty() ? 0.0 : t_.at(j).back(); }

RayFunction hat_function(std::size_t rays, std::size_t j, double lo, double hi) {
  if (!(0 <= lo && lo < hi)) fail(ErrorCode::InvalidArgument, "hat needs 0 <= lo < hi");
  return RayFunction(rays, {{j, {{lo, 0.0}, {0.5 * (lo + hi), 1.0}, {hi, 0.0}}}});
}

double poisson_extension(const RaySystem& s, const RayFunction& F, Complex z) {
  const PointLocation loc = s.classify(z);
  if (const auto* on = std::get_if<OnSystem>(&loc))
    return on->ray ? F.on_ray(*on->ray, std::abs(z)) : F.at_origin();
  const auto& in = std::get<InSector>(loc);
  const Sector& sec = in.sector;
  const double k = sec.exponent();
  const Complex w = reduce_to_halfplane(sec, z);
  QuadratureOptions opt;
  opt.abs_tol = 1e-11;
  opt.max_intervals = 100000;
  double total = 0;
  const std::size_t rays[2] = {in.index, (in.index + 1) % s.size()};
  for (int e = 0; e < 2; ++e) {
    const std::size_t j = rays[e];
    const auto& knots = F.knots_of(j);
    if (knots.empty()) continue;
    const double sign = e == 0 ? 1.0 : -1.0;
    const double s1 = std::pow(knots.front(), k);
    const double s2 = std::pow(knots.back(), k);
    std::vector<double> cuts{sign * w.real(), sign * w.real() - w.imag(), sign * w.real() + w.imag()};
    for (double t : knots) cuts.push_back(std::pow(t, k));
    auto f = [&](double u) { return F.on_ray(j, std::pow(u, 1.0 / k)) * poisson_kernel(sign * u, w); };
    total += integral(f, s1, s2, opt, cuts);
  }
  return total;
}

FubiniCheck check_fubini(const AtomicCharge& nu, const RaySystem& s, const RayFunction& F, double tol) {
  const BalayageCharge bal = balayage_system(nu, s);
  FubiniCheck c;
  for (const auto& a : bal.kept().atoms()) {
    const auto ray = s.ray_of(a.z);
    c.lhs += a.mass * (ray ? F.on_ray(*ray, std::abs(a.z)) : F.at_origin());
  }
  QuadratureOptions opt;
  opt.abs_tol = 1e-11;
  opt.max_intervals = 200000;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto& knots = F.knots_of(j);
    if (knots.empty()) continue;
    std::vector<double> cuts = bal.ray_features(j);
    cuts.insert(cuts.end(), knots.begin(), knots.end());
    c.lhs += integral([&](double t) { return F.on_ray(j, t) * bal.ray_density(j, t); }, knots.front(),
                      knots.back(), opt, cuts);
  }
  for (const auto& a : nu.atoms()) c.rhs += a.mass * poisson_extension(s, F, a.z);
  c.equal = std::abs(c.lhs - c.rhs) <= tol;
  return c;
}

LindelofPreservationReport check_lindelof_preservation(const AtomicCharge& nu, const RaySystem& s, int p,
                                                       double r0, const std::vector<double>& radii) {
  if (p < 1) fail(ErrorCode::InvalidArgument, "p must be a positive integer");
  if (radii.empty() || !(r0 > 0) || radii.front() <= r0)
    fail(ErrorCode::InvalidArgument, "radii must exceed r0 > 0");
  if (!std::is_sorted(radii.begin(), radii.end())) fail(ErrorCode::InvalidArgument, "radii must increase");
  const BalayageCharge bal = balayage_system(nu, s);
  LindelofPreservationReport rep;
  rep.p = p;
  rep.radii = radii;
  QuadratureOptions opt;
  opt.abs_tol = 1e-10;
  opt.max_intervals = 400000;
  std::vector<std::vector<double>> features(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) features[j] = bal.ray_features(j);
  std::vector<double> swept_integral(s.size(), 0.0);
  double prev = r0;
  for (double r : radii) {
    for (std::size_t j = 0; j < s.size(); ++j)
      swept_integral[j] += integral([&](double t) { return bal.ray_density(j, t) / std::pow(t, p); }, prev, r, opt,
                                    features[j]);
    prev = r;
    Complex bsum = 0;
    for (std::size_t j = 0; j < s.size(); ++j) bsum += std::polar(swept_integral[j], -p * s.theta(j));
    for (const auto& a : bal.kept().atoms()) {
      const double m = std::abs(a.z);
      if (m > r0 && m <= r) bsum += a.mass / std::pow(a.z, p);
    }
    const Complex nsum = lindelof_sum(nu, p, r0, r);
    rep.charge_sums.push_back(nsum);
    rep.balayage_sums.push_back(bsum);
    rep.difference.push_back(std::abs(bsum - nsum));
  }
  // Fit over [sqrt(r_first r_last), r_last] so that atoms passing through the early radii do not count as growth.
  const double mid = std::sqrt(rep.radii.front() * rep.radii.back());
  std::size_t from = 0;
  while (from + 2 < rep.radii.size() && rep.radii[from] < mid * (1 - 1e-12)) ++from;
  rep.slope = log_slope(std::vector<double>(rep.radii.begin() + static_cast<std::ptrdiff_t>(from), rep.radii.end()),
                        std::vector<double>(rep.difference.begin() + static_cast<std::ptrdiff_t>(from),
                                            rep.difference.end()));
  rep.fitted_constant = *std::max_element(rep.difference.begin(), rep.difference.end());
  rep.bounded = std::abs(rep.slope) <= kDivergenceSlope;
  return rep;
}

}  // namespace balayage
