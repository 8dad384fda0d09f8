#pragma once

#include <vector>

namespace fracml {

/// Monotone (Fritsch-Carlson) cubic Hermite interpolant. Shape preserving:
/// no overshoot between data points, which keeps interpolated histories from
/// polluting nonlocal operators with spurious oscillation.
class PchipInterpolant {
 public:
  PchipInterpolant(std::vector<double> x, std::vector<double> y);

  /// Evaluate; extends as a constant outside [x.front(), x.back()].
  double operator()(double t) const;

  double derivative(double t) const;

 private:
  std::vector<double> x_, y_, slope_;
  int find_interval(double t) const;
};

}  // namespace fracml
