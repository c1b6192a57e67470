#include "balayage/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "balayage/errors.hpp"

namespace balayage {
namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  k *= h;
  g *= h;
  if (!std::isfinite(k)) {
    std::ostringstream os;
    os << "non-finite integrand on [" << a << ", " << b << "]";
    fail(ErrorCode::QuadratureFailure, os.str());
  }
  return {a, b, k, std::abs(k - g)};
}

QuadratureResult adapt(const std::function<double(double)>& f, const std::vector<double>& cuts,
                       const QuadratureOptions& opt) {
  std::priority_queue<Segment> queue;
  double total = 0.0;
  double total_error = 0.0;
  double frozen_error = 0.0;
  int count = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i] < cuts[i + 1])) continue;
    Segment s = kronrod(f, cuts[i], cuts[i + 1]);
    total += s.value;
    total_error += s.error;
    queue.push(s);
    ++count;
  }
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  while (!queue.empty() && total_error > target()) {
    if (count >= opt.max_intervals) {
      std::ostringstream os;
      os << "error estimate " << total_error << " above target " << target() << " after " << count
         << " intervals";
      fail(ErrorCode::QuadratureFailure, os.str());
    }
    Segment s = queue.top();
    queue.pop();
    const double mid = 0.5 * (s.a + s.b);
    if (!(s.a < mid && mid < s.b)) {
      // Cannot split further in double precision.
      frozen_error += s.error;
      continue;
    }
    Segment left = kronrod(f, s.a, mid);
    Segment right = kronrod(f, mid, s.b);
    total += left.value + right.value - s.value;
    total_error += left.error + right.error - s.error;
    queue.push(left);
    queue.push(right);
    ++count;
  }
  // Re-sum to shed accumulated update rounding.
  double sum = 0.0;
  double err = frozen_error;
  while (!queue.empty()) {
    sum += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  if (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(sum))) {
    std::ostringstream os;
    os << "error estimate " << err << " could not be reduced below target";
    fail(ErrorCode::QuadratureFailure, os.str());
  }
  return {sum, err, count};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options, const std::vector<double>& breakpoints) {
  if (std::isnan(a) || std::isnan(b)) fail(ErrorCode::InvalidArgument, "NaN integration limit");
  if (a == b) return {};
  if (a > b) {
    QuadratureResult r = integrate(f, b, a, options, breakpoints);
    r.value = -r.value;
    return r;
  }
  std::vector<double> inner;
  for (double x : breakpoints)
    if (std::isfinite(x) && x > a && x < b) inner.push_back(x);
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());

  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  if (!lo_inf && !hi_inf) {
    std::vector<double> cuts{a};
    cuts.insert(cuts.end(), inner.begin(), inner.end());
    cuts.push_back(b);
    return adapt(f, cuts, options);
  }

  // Anchor the finite part between the outermost finite points.
  double lo = lo_inf ? (inner.empty() ? (hi_inf ? 0.0 : b) : inner.front()) : a;
  double hi = hi_inf ? (inner.empty() ? lo : inner.back()) : b;
  if (lo_inf && hi_inf && inner.empty()) lo = hi = 0.0;
  if (lo > hi) std::swap(lo, hi);

  // One composite integrand over s: finite part [lo,hi] kept as-is, tails mapped into [-1,0) and (1,2].
  const double L_hi = std::max(1.0, std::abs(hi));
  const double L_lo = std::max(1.0, std::abs(lo));
  const double span = hi - lo;
  auto g = [&](double s) -> double {
    if (s < 0.0) {
      // s in (-1, 0): t = lo - L u/(1-u), u = -s
      const double u = -s;
      const double w = 1.0 - u;
      const double t = lo - L_lo * u / w;
      const double v = f(t);
      return v == 0.0 ? 0.0 : v * L_lo / (w * w);
    }
    if (s > 1.0) {
      const double u = s - 1.0;
      const double w = 1.0 - u;
      const double t = hi + L_hi * u / w;
      const double v = f(t);
      return v == 0.0 ? 0.0 : v * L_hi / (w * w);
    }
    return span > 0 ? f(lo + s * span) * span : 0.0;
  };
  std::vector<double> cuts;
  if (lo_inf) cuts.push_back(-1.0);
  cuts.push_back(0.0);
  if (span > 0) {
    for (double x : inner)
      if (x > lo && x < hi) cuts.push_back((x - lo) / span);
    cuts.push_back(1.0);
  }
  if (hi_inf) {
    if (span <= 0) cuts.push_back(1.0);
    cuts.push_back(2.0);
  }
  return adapt(g, cuts, options);
}

double integral(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& options,
                const std::vector<double>& breakpoints) {
  return integrate(f, a, b, options, breakpoints).value;
}

}  // namespace balayage
