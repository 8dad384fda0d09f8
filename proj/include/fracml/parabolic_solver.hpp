#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fracml/ab_operators.hpp"
#include "fracml/nonlocal_space.hpp"

namespace fracml {

/// Sampled u(t_k, x_j), row-major in k. Row 0 is the initial datum; the
/// history convention u(t,.) = u(a,.) for t < a applies throughout.
struct SpaceTimeField {
  TimeGrid tgrid;
  SpaceGrid xgrid;
  std::vector<double> values;  // (kappa+1) * n_points

  static SpaceTimeField make(const TimeGrid& tgrid, const SpaceGrid& xgrid);

  double at(int k, int j) const { return values[(size_t)k * xgrid.n_points + j]; }
  double& at(int k, int j) { return values[(size_t)k * xgrid.n_points + j]; }
  std::span<const double> row(int k) const {
    return {values.data() + (size_t)k * xgrid.n_points, (size_t)xgrid.n_points};
  }

  TimeSeries time_slice(int j) const;
  SampledField space_slice(int k) const;
};

struct SolverConfig {
  FractionalOrder order;
  SpatialKernelSpec spatial;
  std::function<double(double t, double x)> g;
  double exterior_value = 0.0;   // Dirichlet datum outside the box
  double linear_solver_tol = 1e-12;
  int max_history = 0;           // 0 = exact history
  bool parallel = true;          // serial reference path when false
};

struct StepDiagnostics {
  double W;            // diagonal convolution mass at this step
  int iterations;      // CG iterations
  double residual;     // final linear residual (2-norm)
};

struct SolveResult {
  SpaceTimeField field;
  std::vector<StepDiagnostics> diagnostics;
};

/// Implicit stepper for the discrete problem L u = J u + g: at each step the
/// unknown row solves (W_k I + C_k I - J_h) u_k = history + closure + g_k
/// with the dense nonlocal matrix J_h assembled once. The matrix is
/// symmetric positive definite by the M-matrix structure (asserted at
/// assembly), solved by Jacobi-preconditioned conjugate gradients with
/// deterministic reductions.
class ParabolicStepper {
 public:
  ParabolicStepper(const SolverConfig& cfg, const TimeGrid& tgrid,
                   const SpaceGrid& xgrid);

  /// Advance row k (rows 0..k-1 must be filled). Returns diagnostics.
  StepDiagnostics step(SpaceTimeField& field, int k) const;

  /// Run k = 1..kappa from the initial row.
  SolveResult solve(std::span<const double> u0) const;

  /// Dense action of the assembled J_h (exterior contribution excluded).
  void apply_j(std::span<const double> in, std::span<double> out) const;

  double history_weight(int m) const { return weights_[m]; }
  double convolution_mass(int k) const;          // W_k
  const std::vector<double>& exterior_mass() const { return ext_mass_; }

 private:
  SolverConfig cfg_;
  TimeGrid tgrid_;
  SpaceGrid xgrid_;
  std::vector<double> weights_;   // discrete_l weights w_m
  std::vector<double> jmat_;      // dense N x N
  std::vector<double> ext_mass_;  // per-row coupling mass to the exterior
  int n_;

  friend double weak_residual(const SpaceTimeField&, const SpaceTimeField&,
                              const SolverConfig&);
};

/// Four-term discrete weak form minus the source term. Vanishes at
/// discretization order on solve() outputs when the test field is a bump
/// supported inside the space-time box.
double weak_residual(const SpaceTimeField& u, const SpaceTimeField& test_field,
                     const SolverConfig& cfg);

struct IbpReport {
  double lhs;
  double rhs;
  bool holds;
};

/// Discrete integration-by-parts estimate: with u_0 = 0 (and zero history),
///   sum_{k<=j} u_k L_d u_k >=
///   (tau^alpha c_alpha / 2) sum sum_{0<=i<k<=j} w_{k-i} (u_k - u_i)^2.
IbpReport discrete_ibp_check(const TimeSeries& u, const FractionalOrder& order,
                             int j);

}  // namespace fracml
