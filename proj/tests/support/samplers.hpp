#pragma once

#include <cmath>
#include <complex>

#include "balayage/harmonic_measure.hpp"
#include "support/oracles.hpp"

namespace oracle {

struct BoundCase {
  Complex z;
  balayage::Interval I{0, 1};
  balayage::BoundParameters params;
};

// Mixture of near, far, inside and on-semicircle configurations so that every bound hypothesis is exercised.
inline BoundCase sample_bound_case(Rng& rng) {
  BoundCase c;
  const double len = rng.log_uniform(1e-3, 100);
  const int kind = rng.integer(0, 3);
  double t1 = kind == 1 ? rng.uniform(0, 50) : rng.uniform(-50, 50);
  if (kind == 2) t1 = -t1 - len;
  c.I = balayage::Interval(t1, t1 + len);
  const double x0 = c.I.center(), r = c.I.radius();
  switch (rng.integer(0, 4)) {
    case 0:  // on the semicircle
      c.z = x0 + std::polar(r, rng.uniform(1e-3, pi - 1e-3));
      break;
    case 1:  // inside the semidisk
      c.z = x0 + std::polar(r * rng.uniform(0.01, 0.999), rng.uniform(1e-3, pi - 1e-3));
      break;
    case 2:  // near the origin
      c.z = std::polar(rng.log_uniform(1e-3, 1.0), rng.uniform(1e-3, pi - 1e-3));
      break;
    default:  // anywhere, log-distributed modulus
      c.z = std::polar(rng.log_uniform(1e-2, 1e3), rng.uniform(1e-4, pi - 1e-4));
  }
  c.params.a = rng.uniform(0.02, 0.98);
  c.params.b = rng.uniform(1.01, 6.0);
  return c;
}

}  // namespace oracle
