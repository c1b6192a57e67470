#include <doctest.h>

#include <cmath>

#include "balayage/growth_scales.hpp"
#include "support/oracles.hpp"

using namespace balayage;

namespace {

// floor(g(r)) for increasing g, given the inverse at integer levels.
StepFunction floor_of(const std::function<double(double)>& inverse, int levels) {
  std::vector<std::pair<double, double>> j;
  for (int k = 1; k <= levels; ++k) j.emplace_back(inverse(k), 1.0);
  return StepFunction(j);
}

StepFunction sine_counting(int n) {
  std::vector<std::pair<double, double>> j;
  for (int k = 1; k <= n; ++k) j.emplace_back(k * oracle::pi, 2.0);
  return StepFunction(j);
}

}  // namespace

TEST_CASE("order estimates") {
  const StepFunction sq = floor_of([](double k) { return std::sqrt(k); }, 1000000);
  const Estimate o = order_at_infinity(sq, 10, 1000);
  CHECK(o.value == doctest::Approx(2.0).epsilon(0.025));
  CHECK_FALSE(o.infinite);
  CHECK(o.window_lo == doctest::Approx(100));

  const StepFunction c({{0.5, 3.0}});
  double prev = HUGE_VAL;
  for (double hi : {1e2, 1e4, 1e16}) {
    const double v = order_at_infinity(c, 2, hi).value;
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 0.1);

  std::vector<std::pair<double, double>> ex;
  for (int n = 1; n <= 650; ++n) ex.emplace_back(n, std::floor(std::exp(n)) - std::floor(std::exp(n - 1)));
  const Estimate e = order_at_infinity(StepFunction(ex), 2, 640);
  CHECK(e.infinite);
  CHECK(e.value > kOrderCap);
}

TEST_CASE("type estimates") {
  const StepFunction lin = floor_of([](double k) { return k; }, 5000);
  CHECK(type_at(lin, 1, 10, 4000).value == doctest::Approx(1.0).epsilon(0.01));
  CHECK(type_at(lin, 2, 10, 4000).value < 0.01);
  const Estimate s = type_at(sine_counting(2000), 1, 10, 6000);
  CHECK(std::abs(s.value - 2 / oracle::pi) < 0.02);
  CHECK(std::abs(s.value - 2 / oracle::pi) < 1e-12);
}

TEST_CASE("finite type bounds the order") {
  const StepFunction lin = floor_of([](double k) { return k; }, 5000);
  const StepFunction sq = floor_of([](double k) { return std::sqrt(k); }, 1000000);
  const StepFunction root = floor_of([](double k) { return k * k; }, 200);
  for (const StepFunction* f : {&lin, &sq, &root})
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
      const Estimate t = type_at(*f, p, 10, 1000);
      if (!t.infinite && t.value <= 10) CHECK(order_at_infinity(*f, 10, 1000).value <= p + 0.1);
    }
}

TEST_CASE("convergence integral at infinity") {
  const StepFunction root = floor_of([](double k) { return k * k; }, 2000);
  const ConvergenceReport c = convergence_integral_inf(root, 1, 1, 1e6);
  CHECK(c.converges);
  CHECK_FALSE(c.trend.divergent);
  CHECK(std::isfinite(c.stieltjes));
  CHECK(std::abs(c.stieltjes - c.parts_rhs) <= 1e-12 * std::max(1.0, std::abs(c.stieltjes)));
  double direct = 0;
  for (int k = 2; k <= 1000; ++k) direct += 1.0 / (k * k);
  CHECK(c.stieltjes == doctest::Approx(direct).epsilon(1e-13));

  const StepFunction lin = floor_of([](double k) { return k; }, 100000);
  const ConvergenceReport d = convergence_integral_inf(lin, 1, 1, 1e5);
  CHECK_FALSE(d.converges);
  CHECK(d.trend.divergent);
  CHECK(d.trend.slope == doctest::Approx(1.0).epsilon(0.05));
  CHECK(std::abs(d.stieltjes - d.parts_rhs) <= 1e-12 * std::abs(d.stieltjes));
}

TEST_CASE("parts identities on random step functions") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<double, double>> j;
    const int n = rng.integer(1, 40);
    for (int i = 0; i < n; ++i) j.emplace_back(rng.log_uniform(1e-3, 1e3), rng.uniform(-2, 3));
    const double base = trial % 4 == 0 ? rng.uniform(0, 2) : 0.0;
    const StepFunction f(j, base);
    const double p = trial % 5 == 0 ? 0.0 : rng.uniform(0.1, 3);
    const double r0 = rng.log_uniform(1e-2, 10);

    if (p > 0) {
      const ConvergenceReport c = convergence_integral_inf(f, p, r0, r0 * rng.log_uniform(2, 1e4));
      const double scale = std::abs(f(r0)) / std::pow(r0, p) + std::abs(c.stieltjes);
      CHECK_MESSAGE(std::abs(c.stieltjes - c.parts_rhs) <= 1e-12 * std::max(1.0, scale),
                    c.stieltjes << " " << c.parts_rhs << " " << scale);
    }
    const ZeroReport z = convergence_integral_zero(f, p, r0);
    CHECK(std::abs(z.shifted - z.identity_rhs) <= 1e-12 * std::max(1.0, std::abs(z.shifted)));
    CHECK(z.f0 == base);
    if (base != 0) CHECK(std::isinf(z.integral));
  }
}

TEST_CASE("behaviour at the origin") {
  const ZeroReport one = convergence_integral_zero(StepFunction({{0.5, 1.0}}), 0, 1);
  CHECK(one.log_stieltjes == std::log(0.5));
  CHECK(one.shifted == doctest::Approx(-std::log(0.5)).epsilon(1e-15));
  CHECK(std::abs(one.identity_rhs - one.shifted) < 1e-15);

  const ZeroReport none = convergence_integral_zero(StepFunction({{5.0, 1.0}}), 1, 1);
  CHECK(none.integral == 0.0);
  CHECK(none.stieltjes == 0.0);
  CHECK(none.log_stieltjes == 0.0);
  CHECK(none.identity_rhs == 0.0);

  // Jumps of 1/k^3 at e^{-k}: f(r) log r -> 0 and the log integral stays finite.
  std::vector<std::pair<double, double>> j;
  for (int k = 1; k <= 700; ++k) j.emplace_back(std::exp(-double(k)), 1.0 / (double(k) * k * k));
  const ZeroReport slow = convergence_integral_zero(StepFunction(j), 0, 1);
  CHECK(std::abs(slow.f_log_r.back()) < std::abs(slow.f_log_r[5]));
  CHECK(std::abs(slow.f_log_r.back()) < 0.1);
  CHECK(std::isfinite(slow.log_stieltjes));
  CHECK(std::abs(slow.shifted - slow.identity_rhs) <= 1e-12 * std::abs(slow.shifted));
}

TEST_CASE("growth report bundles the estimators") {
  const GrowthReport g = growth_report(sine_counting(2000), 1, 10, 6000);
  CHECK(g.order.value == doctest::Approx(1.0).epsilon(0.1));
  CHECK(std::abs(g.type.value - 2 / oracle::pi) < 0.02);
  CHECK(g.convergence.trend.divergent);
}
