#pragma once

#include <functional>
#include <vector>

#include "fracml/kernels.hpp"

namespace fracml {

/// Uniform grid on [a, b] with kappa steps, tau = (b - a)/kappa. Sampled
/// functions extend as u(t) = u(a) for t < a (history convention).
struct TimeGrid {
  double a;
  double b;
  int kappa;
  double tau;

  static TimeGrid make(double a, double b, int kappa);
  double node(int k) const { return a + k * tau; }
};

struct TimeSeries {
  TimeGrid grid;
  std::vector<double> values;  // kappa + 1 entries

  static TimeSeries sample(const TimeGrid& grid,
                           const std::function<double(double)>& u);
};

using ScalarFn = std::function<double(double)>;

/// Caller-asserted Hoelder data for the near-field split in ab_caputo_form.
/// constant == 0 requests an automatic Lipschitz estimate from samples.
struct HolderData {
  double constant = 0.0;
  double exponent = 1.0;
};

struct AccuracyReport {
  double split_point = 0.0;      // the t - eps split location
  double near_field_bound = 0.0; // Hoelder bound on the discarded near field
  double quad_error = 0.0;
  double dropped_tail = 0.0;     // bound on the truncated pre-history tail
};

/// Velocity form: nu_alpha * int_a^t E_alpha[c (t-s)^alpha] u'(s) ds.
/// The kernel is bounded and continuous, so this is a plain adaptive
/// quadrature to absolute tolerance quad_tol.
double ab_derivative(const ScalarFn& u_prime, const FractionalOrder& order,
                     double a, double t, double quad_tol);

/// Caputo-type pointwise form:
///   nu_alpha E_alpha[c (t-a)^alpha] (u(t) - u(a))
///   + c_alpha int_a^t (t-s)^{alpha-1} E_{alpha,alpha}[c (t-s)^alpha]
///     (u(t) - u(s)) ds,
/// with the weakly singular integral split at t - eps; the discarded near
/// field is bounded through the Hoelder estimate and eps is chosen so that
/// the bound stays below quad_tol / 2.
double ab_caputo_form(const ScalarFn& u, const FractionalOrder& order,
                      double a, double t, double quad_tol,
                      const HolderData& holder = {},
                      AccuracyReport* report = nullptr);

/// History form c_alpha int_{-inf}^t (u(t) - u(s)) T(t,s) ds with
/// u(s) = u(a) for s < a. The pre-history leg is integrated numerically on
/// [a - S, a] with S grown until the analytic remainder bound drops below
/// quad_tol / 2 (bound only; the remainder itself is discarded).
double l_operator(const ScalarFn& u, const FractionalOrder& order, double a,
                  double t, double quad_tol, AccuracyReport* report = nullptr);

/// Same on sampled data through the monotone cubic interpolant.
double l_operator(const TimeSeries& u, const FractionalOrder& order, double t,
                  double quad_tol, AccuracyReport* report = nullptr);

/// Associated fractional integral:
///   (1-alpha)/B(alpha) u(t) + alpha/(B(alpha) Gamma(alpha))
///     int_a^t u(y) (t-y)^{alpha-1} dy,
/// weak singularity removed by the substitution w = (t-y)^alpha.
double ab_integral(const ScalarFn& u, const FractionalOrder& order, double a,
                   double t, double quad_tol);

/// Shared machinery behind l_operator and the temporal Pucci operators:
/// c_alpha int (weight applied to u(t)-u(s)) T(t,s) ds over the full history.
double weighted_history_integral(const ScalarFn& u, const FractionalOrder& order,
                                 double a, double t, double quad_tol,
                                 const std::function<double(double)>& weight,
                                 AccuracyReport* report = nullptr);

/// Convolution weights w_m = E_{alpha,alpha}[c tau^alpha m^alpha] m^{alpha-1}
/// for m = 1..kappa (index 0 unused).
std::vector<double> discrete_l_weights(const FractionalOrder& order, double tau,
                                       int kappa);

/// Discrete operator
///   tau^alpha c_alpha sum_{0 <= i < k} w_{k-i} (u_k - u_i),
/// summed from i = k-1 down to 0 for reproducibility; 0 for k = 0.
double discrete_l(const TimeSeries& u, const FractionalOrder& order, int k);

double discrete_l_from_weights(const TimeSeries& u, const FractionalOrder& order,
                               const std::vector<double>& weights, int k);

/// All nodes at once. The OpenMP variant parallelizes over k; every per-k
/// inner sum keeps the fixed sequential order, so both variants are
/// bit-identical.
std::vector<double> discrete_l_all_serial(const TimeSeries& u,
                                          const FractionalOrder& order);
std::vector<double> discrete_l_all(const TimeSeries& u,
                                   const FractionalOrder& order);

/// Analytic closure of the pre-history part of the infinite convolution sum
/// (indices i < 0, where u_i = u_0 by convention):
///   nu_alpha E_alpha[c (t_k - a)^alpha] (u_k - u_0).
/// discrete_l + this closure is the full discrete operator; the truncated
/// sum alone drifts from the continuous operator by exactly this term
/// whenever u_k != u_0.
double discrete_l_history_closure(const TimeSeries& u,
                                  const FractionalOrder& order, int k);

}  // namespace fracml
