#pragma once

// Independent reference computations for the unit and acceptance tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "balayage/charges.hpp"

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

// Angle subtended by [t1, t2] from z, by a plain arctan difference.
inline double hm_arctan(Complex z, double t1, double t2) {
  const double x = z.real(), y = z.imag();
  return (std::atan((t2 - x) / y) - std::atan((t1 - x) / y)) / pi;
}

// Composite Simpson rule on a uniform grid.
template <typename F>
double simpson(F f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
  return s * h / 3;
}

// Poisson integral over [t1, t2] in the angle variable phi = atan((t - x)/y), where the kernel becomes 1/pi.
template <typename F>
double poisson_integral(F g, Complex z, double t1, double t2, int n = 4000) {
  const double x = z.real(), y = z.imag();
  const double p1 = std::atan((t1 - x) / y), p2 = std::atan((t2 - x) / y);
  return simpson([&](double p) { return g(x + y * std::tan(p)); }, p1, p2, n) / pi;
}

// log |E_q(z/zeta)| through the complex logarithm of the Weierstrass factor.
inline double weierstrass_log(Complex zeta, Complex z, int q) {
  if (q < 0) return std::log(std::abs(zeta - z));
  const Complex u = z / zeta;
  Complex s = std::log(1.0 - u);
  for (int j = 1; j <= q; ++j) s += std::pow(u, j) / static_cast<double>(j);
  return s.real();
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(gen); }
};

// Atoms with moduli in [r_lo, r_hi], arbitrary arguments, masses in [m_lo, m_hi] with random signs when signed.
inline balayage::AtomicCharge random_charge(Rng& rng, int n, double r_lo, double r_hi, bool signed_masses,
                                            double m_lo = 0.1, double m_hi = 2.0) {
  std::vector<balayage::Atom> atoms;
  for (int i = 0; i < n; ++i) {
    const double r = rng.log_uniform(r_lo, r_hi);
    const double th = rng.uniform(-pi, pi);
    double m = rng.uniform(m_lo, m_hi);
    if (signed_masses && rng.uniform(0, 1) < 0.5) m = -m;
    atoms.push_back({std::polar(r, th), m});
  }
  return balayage::AtomicCharge(std::move(atoms));
}

}  // namespace oracle
