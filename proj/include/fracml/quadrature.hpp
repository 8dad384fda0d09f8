#pragma once

#include <functional>

namespace fracml {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int intervals = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b] to absolute tolerance abs_tol.
/// Splits the worst interval until the summed error estimate is below
/// tolerance or max_intervals is reached; never throws on non-convergence,
/// callers inspect `converged`.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_intervals = 4000);

/// Same but raises AccuracyError on non-convergence.
double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_intervals = 4000);

}  // namespace fracml
