#pragma once

#include <functional>
#include <vector>

namespace balayage {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_intervals = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

// Globally adaptive 7/15-point Gauss-Kronrod quadrature.
// Infinite limits are handled by the map t = c + L s/(1-s).
// Breakpoints inside (a, b) seed the initial partition; use them at kinks and near-singular points.
// Throws QuadratureFailure when the error target is not met within max_intervals.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {},
                           const std::vector<double>& breakpoints = {});

double integral(const std::function<double(double)>& f, double a, double b,
                const QuadratureOptions& options = {},
                const std::vector<double>& breakpoints = {});

}  // namespace balayage
