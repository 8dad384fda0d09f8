#pragma once

#include <vector>

#include "fracml/parabolic_solver.hpp"

namespace fracml {

/// Scaled space-time box B_r(x0) x [t0 - r^{2 sigma/alpha}, t0].
struct ParabolicCylinder {
  double x0;
  double t0;
  double radius;
  double sigma;
  double alpha;

  static ParabolicCylinder make(double x0, double t0, double radius,
                                double sigma, double alpha);
  double time_depth() const;  // r^{2 sigma / alpha}
};

/// max - min of the field over grid nodes inside the cylinder
/// (nearest-node inclusion). DomainError when no node falls inside.
double oscillation(const SpaceTimeField& u, const ParabolicCylinder& cyl);

struct OscillationReport {
  std::vector<double> radii;         // r^k
  std::vector<double> oscillations;  // osc over Q_{r^k}
  double fitted_kappa;               // NaN when undefined
  bool kappa_defined;
  std::vector<char> bound_ok;        // osc_k <= 2 r^{kappa k}
};

/// Oscillations over the nested cylinders Q_{r^k}, k = 0..depth, centered at
/// (x0, t0); kappa fitted by least squares on log osc against k log r over
/// the cylinders with positive oscillation. Cylinders must keep >= 3 nodes
/// per dimension; the error names the first k that is under-resolved.
OscillationReport oscillation_decay(const SpaceTimeField& u, double r,
                                    int depth, double x0, double t0,
                                    double sigma, double alpha);

struct Region {
  double x_min, x_max, t_min, t_max;
};

/// sup over node pairs of |u(x,t) - u(y,s)| / (|x-y|^kappa +
/// |t-s|^{kappa alpha/(2 sigma)}); deterministic stride subsampling above
/// 10^4 nodes.
double holder_seminorm(const SpaceTimeField& u, double kappa, double alpha,
                       double sigma, const Region& region);

struct PointEstimateConfig {
  FractionalOrder order;
  double sigma = 1.0;
  int kappa = 96;
  int n_points = 161;
  double eps0 = 1e-3;           // forcing level, g == eps0
  double exterior_value = 1.0;  // Dirichlet datum outside B_2
  double dip_depth = 2.0;       // 0 disables the dip entirely
  double linear_solver_tol = 1e-10;
  bool parallel = true;
};

struct PointEstimateReport {
  double theta_emp;  // 1 - max u over B_1 x [-1, 0]
  double mu_emp;     // measured |{u <= 0} cap (B_1 x [-2, -1])|
  bool passed;
};

/// Builds data with u <= 1 and a dip of space-time measure >= mu in
/// B_1 x [-2, -1], runs the solver on B_2 x [-2, 0] with |g| <= eps0, and
/// measures theta_emp = 1 - max u over B_1 x [-1, 0].
PointEstimateReport point_estimate_scenario(const PointEstimateConfig& cfg,
                                            double mu);

}  // namespace fracml
