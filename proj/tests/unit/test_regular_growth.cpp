#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "balayage/errors.hpp"
#include "balayage/regular_growth.hpp"
#include "support/oracles.hpp"

using namespace balayage;

namespace {

StepFunction unit_steps(int n, double scale = 1.0) {
  std::vector<std::pair<double, double>> j;
  for (int k = 1; k <= n; ++k) j.emplace_back(k * scale, 1.0);
  return StepFunction(j);
}

std::vector<Atom> sine_zeros(int n) {
  std::vector<Atom> a;
  for (int k = 1; k <= n; ++k) {
    a.push_back({Complex(k * oracle::pi, 0), 1.0});
    a.push_back({Complex(-k * oracle::pi, 0), 1.0});
  }
  return a;
}

}  // namespace

TEST_CASE("indicator estimates") {
  for (double th : {0.0, 1.0, 2.5}) CHECK(indicator_estimate([](Complex z) { return std::abs(z); }, th, 1, 2, 512) ==
                                          doctest::Approx(1.0).epsilon(1e-14));
  const Evaluable rp = [](Complex z) { return std::max(z.real(), 0.0); };
  CHECK(indicator_estimate(rp, 0, 1, 2, 512) == doctest::Approx(1.0));
  CHECK(std::abs(indicator_estimate(rp, kPi / 2, 1, 2, 512)) < 1e-14);

  const int N = 4000;
  const Evaluable v = CanonicalPotential(AtomicCharge(sine_zeros(N)), 1).evaluable();
  const double h = indicator_estimate(v, kPi / 2, 1, 10, N * kPi / 4);
  CHECK(std::abs(h - 1) <= 0.05);
  CHECK_THROWS_AS(indicator_estimate(v, 0, 0, 1, 2), Error);
}

TEST_CASE("kernel integrals off the positive axis") {
  const StepFunction step({{1.0, 1.0}});
  CHECK(kernel_stieltjes(StepFunction(), 0, Complex(0, 2)) == 0.0);
  CHECK(pv_kernel_integral(StepFunction(), 0, Complex(0, 2)) == 0.0);
  const double log_sqrt5 = 0.5 * std::log(5.0);
  CHECK(kernel_stieltjes(step, 0, Complex(0, 2)) == doctest::Approx(log_sqrt5).epsilon(1e-15));
  CHECK(std::abs(pv_kernel_integral(step, 0, Complex(0, 2)) - log_sqrt5) <= 1e-6);
  CHECK(std::abs(pv_kernel_integral(step, 0, Complex(0, 2)) - 0.804719) <= 1e-6);

  oracle::Rng rng(51);
  for (int i = 0; i < 40; ++i) {
    const StepFunction one({{rng.log_uniform(0.1, 10), rng.uniform(-2, 2)}});
    const int q = rng.integer(0, 3);
    Complex z = std::polar(rng.log_uniform(0.1, 20), rng.uniform(-oracle::pi, oracle::pi));
    if (std::abs(z.imag()) < 1e-3 && z.real() > 0) z = -z;
    CHECK(std::abs(pv_kernel_integral(one, q, z) - kernel_stieltjes(one, q, z)) <=
          1e-6 * std::max(1.0, std::abs(kernel_stieltjes(one, q, z))));
  }
}

TEST_CASE("principal value on the positive axis") {
  const StepFunction step({{1.0, 1.0}});
  const PVReport r = pv_kernel_report(step, 0, Complex(2, 0));
  // log t - log|2 - t| from 1 to infinity.
  CHECK(std::abs(r.value) <= 1e-6);
  CHECK(std::abs(kernel_stieltjes(step, 0, Complex(2, 0))) < 1e-15);
  REQUIRE(r.excised.size() >= 3);
  std::vector<double> gaps;
  for (std::size_t i = 1; i < r.excised.size(); ++i) gaps.push_back(std::abs(r.excised[i] - r.excised[i - 1]));
  for (std::size_t i = 1; i < gaps.size(); ++i) CHECK(gaps[i] < gaps[i - 1]);

  const StepFunction three({{0.5, 1.0}, {1.5, 2.0}, {4.0, -1.0}});
  for (int q = 0; q <= 2; ++q)
    for (double x : {0.8, 2.7, 7.0})
      CHECK(std::abs(pv_kernel_integral(three, q, Complex(x, 0)) - kernel_stieltjes(three, q, Complex(x, 0))) <=
            1e-6);

  try {
    pv_kernel_integral(step, 0, Complex(1, 0));
    FAIL("expected SingularityUnresolved");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularityUnresolved);
  }
}

TEST_CASE("ray counting functions") {
  const RaySystem s({0, kPi});
  const AtomicCharge nu({{Complex(2, 0), 1.0}, {Complex(-3, 0), 2.0}, {Complex(0, 0), 1.0}});
  const auto n = ray_counting(nu, s);
  CHECK(n[0](0) == 1.0);
  CHECK(n[0](2) == 2.0);
  CHECK(n[1](3) == 2.0);
  CHECK_THROWS_AS(ray_counting(AtomicCharge({{Complex(0, 1), 1.0}}), s), Error);

  const BalayageCharge bal = balayage_system(AtomicCharge({{Complex(0, 2), 1.0}}), s);
  const auto m = sampled_ray_counting(bal, 1e4, 20000);
  CHECK(m[0](2) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(m[1](1e4) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("jittered radii avoid integers") {
  const auto g = jittered_grid(100, 1600, 16);
  CHECK(g.size() >= 60);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i] != std::round(g[i]));
    if (i) CHECK(g[i] > g[i - 1]);
  }
}

TEST_CASE("complete regularity diagnostics") {
  const RaySystem s({0, kPi});
  const int N = 200000;
  const std::vector<StepFunction> ap{unit_steps(N), unit_steps(N)};
  const CRGReport reg = crg_on_rays(s, ap, 1, 128, 2048);
  CHECK(reg.stable);
  for (const auto& ray : reg.rays) {
    CHECK(ray.stable);
    CHECK(ray.exceptional_density <= kExceptionalFraction);
    CHECK(std::abs(ray.limit) < 0.05);
  }

  // Unit atoms at +-k for k in [4^m, 2 4^m): counting density swings between about 1/3 and 2/3.
  std::vector<std::pair<double, double>> blocks;
  for (int m = 0; m < 9; ++m)
    for (long k = 1L << (2 * m); k < (2L << (2 * m)); ++k) blocks.emplace_back(double(k), 1.0);
  const std::vector<StepFunction> irr{StepFunction(blocks), StepFunction(blocks)};
  const CRGReport bad = crg_on_rays(s, irr, 1, 128, 2048);
  CHECK_FALSE(bad.stable);

  // Scaling the counting functions scales every value.
  const std::vector<StepFunction> twice{ap[0].scaled(2.5), ap[1].scaled(2.5)};
  for (double r : {150.5, 333.3}) CHECK(crg_value(s, twice, 1, 0, r) == doctest::Approx(2.5 * crg_value(s, ap, 1, 0, r)).epsilon(1e-12));

  std::vector<std::pair<double, double>> squares;
  for (int k = 1; k <= 3000; ++k) squares.emplace_back(double(k) * k, 1.0);
  const std::vector<StepFunction> sq{StepFunction(squares), StepFunction()};
  const CRGReport small = crg_small_p(s, sq, 0.5, 1e4, 4e6);
  CHECK(small.rays[0].stable);
  CHECK(small.rays[0].limit == doctest::Approx(1.0).epsilon(0.01));
  CHECK(small.rays[1].limit == 0.0);
  CHECK_THROWS_AS(crg_small_p(s, sq, 1.5, 1e4, 4e6), Error);
}

TEST_CASE("functionals of the four-bisector example") {
  const std::array<StepFunction, 4> zero{};
  for (double b : exgr2_b(zero, 10)) CHECK(b == 0.0);

  const std::array<RadialFunction, 4> lin{[](double s) { return s; }, [](double s) { return s; },
                                          [](double s) { return s; }, [](double s) { return s; }};
  for (double t : {10.0, 100.0, 1000.0})
    for (double b : exgr2_b(lin, t)) CHECK(b == doctest::Approx(std::sqrt(2.0) * kPi / std::sqrt(t)).epsilon(1e-9));

  // sqrt(s) on every ray: b_k = 4 t^{-3/4} pi / (4 sin(5 pi / 8)).
  const RadialFunction root = [](double s) { return std::sqrt(s); };
  const std::array<RadialFunction, 4> roots{root, root, root, root};
  for (double t : {0.5, 10.0, 100.0})
    for (double b : exgr2_b(roots, t))
      CHECK(b == doctest::Approx(std::pow(t, -0.75) * kPi / std::sin(5 * kPi / 8)).epsilon(1e-8));

  // Step functions against Simpson between the jumps, with s = 1/u on the tail.
  const StepFunction few({{0.5, 1.0}, {2.0, 3.0}, {7.0, -1.0}, {30.0, 2.0}}, 0.5);
  const StepFunction other({{1.0, 2.0}, {5.0, 1.0}});
  const std::array<StepFunction, 4> mixed{few, other, few, StepFunction()};
  for (double t : {0.5, 10.0, 100.0}) {
    const auto weight = [t](const StepFunction& f) {
      std::vector<double> cuts{0.0};
      for (double x : f.points()) cuts.push_back(x);
      double v = 0;
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        v += f(cuts[i]) * oracle::simpson([t](double s) { return s / (s * s * s * s + t * t); }, cuts[i],
                                          cuts[i + 1], 2000);
      const double last = std::max(cuts.back(), 1.0);
      if (last > cuts.back()) v += f(cuts.back()) * oracle::simpson([t](double s) { return s / (s * s * s * s + t * t); },
                                                                    cuts.back(), last, 2000);
      v += f(last) * oracle::simpson([t](double u) { return u / (1 + t * t * u * u * u * u); }, 0, 1 / last, 2000);
      return v;
    };
    const auto closed = exgr2_b(mixed, t);
    for (int k = 0; k < 4; ++k)
      CHECK(closed[k] == doctest::Approx(2 * (weight(mixed[k]) + weight(mixed[(k + 1) % 4]))).epsilon(1e-9));
  }

  const StepFunction n = unit_steps(100000, 0.01);
  const std::array<StepFunction, 4> steps{n, n, n, n};
  // n(s) = floor(100 s) is close to 100 s.
  for (double t : {10.0, 100.0})
    CHECK(exgr2_b(steps, t)[0] == doctest::Approx(100 * std::sqrt(2.0) * kPi / std::sqrt(t)).epsilon(1e-2));

  const Exgr2Report rep = exgr2_functionals(steps, {10, 100, 1000}, {2, 8, 32});
  for (const Complex& L : rep.L) CHECK(std::abs(L) < 1e-12);
  // floor(100 s) averages 100 s - 1/2 and stops growing at s = 1000.
  const RadialFunction clipped = [](double s) { return std::clamp(100 * s - 0.5, 0.0, 1e5); };
  const std::array<RadialFunction, 4> cl{clipped, clipped, clipped, clipped};
  for (std::size_t i = 0; i < rep.ts.size(); ++i)
    CHECK(rep.b[i][0] == doctest::Approx(exgr2_b(cl, rep.ts[i])[0]).epsilon(1e-4));
}

TEST_CASE("angular density") {
  std::vector<Atom> ray;
  for (int k = 1; k <= 4096; ++k) ray.push_back({Complex(k, 0), 1.0});
  const auto grid = dyadic_grid(16, 4096);
  CHECK(angular_density(AtomicCharge(ray), -0.1, 0.1, 1, grid).limit == doctest::Approx(1.0));
  CHECK(angular_density(AtomicCharge(ray), 0.5, 3.0, 1, grid).limit == 0.0);
  const AngularDensity sd = angular_density(AtomicCharge(sine_zeros(4000)), 0, kTwoPi, 1, dyadic_grid(16, 8192));
  CHECK(std::abs(sd.limit - 2 / kPi) <= 0.02);
  for (const Complex& l : sd.lindelof) CHECK(std::abs(l) < 1e-12);
}
