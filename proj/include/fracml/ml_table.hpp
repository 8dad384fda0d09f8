#pragma once

#include <memory>
#include <vector>

namespace fracml {

/// Piecewise-Chebyshev accelerator for y (>= 0) -> E_{alpha,beta}(-y).
///
/// History convolutions evaluate the same negative-axis Mittag-Leffler
/// profile at thousands of quadrature nodes; the mid-range spectral-integral
/// evaluation costs ~1e5 flops per call, which dominates every operator.
/// The table interpolates dyadic segments up to the asymptotic radius
/// (interpolation error below 1e-13) and delegates to the cheap asymptotic
/// expansion beyond it.
class MLNegTable {
 public:
  MLNegTable(double alpha, double beta);

  double operator()(double y) const;

  /// Shared, lazily built, thread-safe cache keyed by (alpha, beta).
  static const MLNegTable& get(double alpha, double beta);

 private:
  struct Segment {
    double lo, hi;
    std::vector<double> coeff;  // Chebyshev coefficients on [lo, hi]
  };
  double alpha_, beta_;
  double asym_from_;
  std::vector<Segment> segments_;
  double eval_segment(const Segment& s, double y) const;
};

}  // namespace fracml
