#pragma once

#include <string>

#include "fracml/ab_operators.hpp"

namespace fracml {

/// L u = -c1 u + c0 h on [start, end] with initial value u0.
struct FodeProblem {
  FractionalOrder order;
  double c0;
  double c1;
  ScalarFn h;
  double u0;
  double start;
  double end;

  // gamma = alpha c1 / (B + (1-alpha) c1), zeta = B / (B + (1-alpha) c1)
  double gamma() const;
  double zeta() const;
};

/// c1 = 0 solution:
///   u(t) = (1-alpha) c0 / B h(t)
///        + alpha c0 / (B Gamma(alpha)) int h(s) (t-s)^{alpha-1} ds.
TimeSeries solve_c1_zero(const FodeProblem& p, const TimeGrid& grid);

/// Closed form carrying a gamma^{-2alpha} companion relaxation kernel next
/// to the principal one; shipped exactly as derived, with its correctness
/// certified only by fode_residual (see solve_general).
TimeSeries solve_general_companion_form(const FodeProblem& p,
                                        const TimeGrid& grid);

/// Laplace-inversion closed form re-derived from the transformed equation:
///   u(t) = zeta E_alpha[-gamma t^alpha] u0 + (1-alpha) c0 zeta / B h(t)
///        + c0 zeta / B (alpha - (1-alpha) gamma)
///          int (t-s)^{alpha-1} E_{aa}[-gamma (t-s)^alpha] h(s) ds.
TimeSeries solve_general_closed(const FodeProblem& p, const TimeGrid& grid);

/// Implicit convolution-quadrature stepper: inverts the discrete operator
/// (with its analytic history closure) per time step. First-order accurate;
/// kept as a structurally independent cross-check.
TimeSeries solve_general_stepper(const FodeProblem& p, const TimeGrid& grid);

struct GeneralSolveReport {
  TimeSeries solution;
  std::string chosen;  // "companion_form" | "closed_form"
  double companion_residual_max;
  double fallback_residual_max;
};

/// Residual arbitration: evaluates fode_residual for both closed forms and
/// returns the companion form when it meets tolerance, the plain closed form
/// otherwise, with both residual maxima reported.
GeneralSolveReport solve_general(const FodeProblem& p, const TimeGrid& grid,
                                 double quad_tol = 1e-9,
                                 double accept_tol = 1e-4);

/// r_k = L[interpolant of u](t_k) + c1 u(t_k) - c0 h(t_k). r_0 reduces to
/// c1 u0 - c0 h(start) because the operator vanishes identically at the
/// start; residual maxima should be taken over k >= 1.
std::vector<double> fode_residual(const TimeSeries& u, const FodeProblem& p,
                                  double quad_tol);

/// (alpha/2) E_{alpha,alpha}[-2 c1] c0 mu.
double corollary_floor(const FractionalOrder& order, double c0, double c1,
                       double mu);

/// rho(t) = max(2 |r t|^nu - 1, 0).
double barrier_eval(double t, double nu, double r);

/// r = min(1/4, 4^{-alpha/(2 sigma)}).
double barrier_scaling(double alpha, double sigma);

struct BarrierReport {
  double value;   // L rho(t1)
  double d_emp;   // empirical constant: -min over the internal t1 grid
  bool within;    // value <= slack and value >= -d_emp - slack
};

/// Numerically evaluates L rho(t1) over the full history and checks the
/// two-sided bound -d_emp <= L rho(t1) <= 0; d_emp is empirical (no closed
/// form is available for it). Requires nu < alpha.
BarrierReport barrier_l_bound(const FractionalOrder& order, double nu,
                              double sigma, double t1, double quad_tol);

}  // namespace fracml
