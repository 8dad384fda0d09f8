#include "fracml/ab_operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fracml/errors.hpp"
#include "fracml/gamma.hpp"
#include "fracml/interp.hpp"
#include "fracml/ml_table.hpp"
#include "fracml/mittag_leffler.hpp"
#include "fracml/quadrature.hpp"

namespace fracml {

TimeGrid TimeGrid::make(double a, double b, int kappa) {
  if (!(b > a)) throw DomainError("time grid requires b > a");
  if (kappa < 0) throw DomainError("time grid requires kappa >= 0");
  const double tau = kappa > 0 ? (b - a) / kappa : 0.0;
  return TimeGrid{a, b, kappa, tau};
}

TimeSeries TimeSeries::sample(const TimeGrid& grid, const ScalarFn& u) {
  TimeSeries s;
  s.grid = grid;
  s.values.resize(grid.kappa + 1);
  for (int k = 0; k <= grid.kappa; ++k) s.values[k] = u(grid.node(k));
  return s;
}

double ab_derivative(const ScalarFn& u_prime, const FractionalOrder& order,
                     double a, double t, double quad_tol) {
  if (!(t > a)) throw DomainError("ab_derivative requires t > a");
  const double alpha = order.alpha;
  const double mc = -order.c;
  const MLNegTable& e1 = MLNegTable::get(alpha, 1.0);
  auto integrand = [&](double s) {
    return e1(mc * std::pow(t - s, alpha)) * u_prime(s);
  };
  return order.nu_alpha * integrate_or_throw(integrand, a, t, quad_tol);
}

namespace {

double estimate_lipschitz(const ScalarFn& u, double a, double t) {
  const int n = 96;
  const double lo = std::max(a, t - 1.0);
  const double h = (t - lo) / n;
  if (h <= 0.0) return 1.0;
  double m = 0.0;
  double prev = u(lo);
  for (int i = 1; i <= n; ++i) {
    const double cur = u(lo + i * h);
    m = std::max(m, std::abs(cur - prev) / h);
    prev = cur;
  }
  return 2.0 * m + 1e-12;
}

}  // namespace

double ab_caputo_form(const ScalarFn& u, const FractionalOrder& order, double a,
                      double t, double quad_tol, const HolderData& holder,
                      AccuracyReport* report) {
  if (!(t > a)) throw DomainError("ab_caputo_form requires t > a");
  const double alpha = order.alpha;
  const double c = order.c;
  const double beta = holder.exponent;
  if (!(beta > alpha) || beta > 1.0) {
    throw DomainError("ab_caputo_form requires Hoelder exponent in (alpha, 1]");
  }
  const double hc =
      holder.constant > 0.0 ? holder.constant : estimate_lipschitz(u, a, t);

  // eps so that the Hoelder-bounded near field stays below quad_tol / 2:
  //   |near| <= c_alpha Hc E(0) eps^{alpha+beta} / (alpha+beta)
  const double e0 = reciprocal_gamma(alpha);  // E_{alpha,alpha}(0)
  const double ab = alpha + beta;
  double eps = std::pow(quad_tol * ab / (2.0 * order.c_alpha * hc * e0), 1.0 / ab);
  eps = std::min(eps, 0.5 * (t - a));
  const double near_bound =
      order.c_alpha * hc * e0 * std::pow(eps, ab) / ab;

  const double ut = u(t);
  const MLNegTable& e1 = MLNegTable::get(alpha, 1.0);
  const MLNegTable& eaa = MLNegTable::get(alpha, alpha);
  const double boundary =
      order.nu_alpha * e1(-c * std::pow(t - a, alpha)) * (ut - u(a));

  // far field [a, t - eps] under w = (t - s)^alpha:
  //   (c_alpha/alpha) int_{eps^alpha}^{(t-a)^alpha} E_{aa}[c w] (u(t)-u(t-w^{1/a})) dw
  auto integrand = [&](double w) {
    const double s = t - std::pow(w, 1.0 / alpha);
    return eaa(-c * w) * (ut - u(s));
  };
  QuadResult q = integrate(integrand, std::pow(eps, alpha),
                           std::pow(t - a, alpha),
                           quad_tol * alpha / (2.0 * order.c_alpha));
  if (!q.converged) {
    throw AccuracyError("ab_caputo_form quadrature did not converge",
                        q.error_estimate);
  }
  if (report) {
    report->split_point = t - eps;
    report->near_field_bound = near_bound;
    report->quad_error = q.error_estimate * order.c_alpha / alpha;
    report->dropped_tail = 0.0;
  }
  return boundary + (order.c_alpha / alpha) * q.value;
}

double weighted_history_integral(const ScalarFn& u, const FractionalOrder& order,
                                 double a, double t, double quad_tol,
                                 const std::function<double(double)>& weight,
                                 AccuracyReport* report) {
  if (!(t > a)) throw DomainError("history integral requires t > a");
  const double alpha = order.alpha;
  const double c = order.c;
  const MLNegTable& eaa = MLNegTable::get(alpha, alpha);
  const MLNegTable& e1 = MLNegTable::get(alpha, 1.0);
  const double ut = u(t);

  // Everything runs in v = (t - s)^alpha, which removes the power factor:
  //   c_alpha/alpha * int_0^inf E_{aa}[c v] * weight(u(t) - u(t - v^{1/a})) dv.
  auto integrand = [&](double v) {
    const double s = t - std::pow(v, 1.0 / alpha);
    return eaa(-c * v) * weight(ut - u(s));
  };
  const double wa = std::pow(t - a, alpha);
  QuadResult main_leg =
      integrate(integrand, 0.0, wa, quad_tol * alpha / (4.0 * order.c_alpha));
  if (!main_leg.converged) {
    throw AccuracyError("history integral did not converge",
                        main_leg.error_estimate);
  }

  // Pre-history leg (s < a), integrated as given until the remainder bound
  // |weight(u(t)-u(s_V))| * nu_alpha * E_alpha[c V] certifies that what is
  // dropped beyond V stays below quad_tol / 2. The antiderivative is used as
  // a bound only; the leg itself is genuine quadrature.
  double V = std::max(2.0 * wa, 1.0);
  double dropped = 0.0;
  int growth_streak = 0;
  double prev_dropped = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 600; ++i) {
    const double wd = std::abs(weight(ut - u(t - std::pow(V, 1.0 / alpha))));
    dropped = wd * order.nu_alpha * e1(-c * V);
    if (dropped <= 0.5 * quad_tol) break;
    growth_streak = dropped >= prev_dropped ? growth_streak + 1 : 0;
    if (growth_streak > 40 || V > 1e290) {
      throw DomainError(
          "history integral diverges: pre-history differences must grow "
          "slower than |s|^alpha (history convention: u(s) = u(a) for s < a)");
    }
    prev_dropped = dropped;
    V *= 2.0;
  }
  double tail_value = 0.0;
  double tail_quad_err = 0.0;
  {
    double v0 = wa;
    const int panels =
        std::max(1, (int)std::ceil(std::log2(V / std::max(wa, 1e-12))));
    const double per_tol = quad_tol * alpha / (4.0 * order.c_alpha * panels);
    while (v0 < V) {
      const double v1 = std::min(2.0 * std::max(v0, 1e-12), V);
      QuadResult q = integrate(integrand, v0, v1, per_tol);
      tail_value += q.value;
      tail_quad_err += q.error_estimate;
      v0 = v1;
    }
  }

  if (report) {
    report->split_point = a;
    report->near_field_bound = 0.0;
    report->quad_error =
        (main_leg.error_estimate + tail_quad_err) * order.c_alpha / alpha;
    report->dropped_tail = dropped;
  }
  return (order.c_alpha / alpha) * (main_leg.value + tail_value);
}

double l_operator(const ScalarFn& u, const FractionalOrder& order, double a,
                  double t, double quad_tol, AccuracyReport* report) {
  return weighted_history_integral(
      u, order, a, t, quad_tol, [](double d) { return d; }, report);
}

double l_operator(const TimeSeries& u, const FractionalOrder& order, double t,
                  double quad_tol, AccuracyReport* report) {
  std::vector<double> xs(u.values.size());
  for (int k = 0; k < (int)xs.size(); ++k) xs[k] = u.grid.node(k);
  PchipInterpolant interp(std::move(xs), u.values);
  return l_operator([&interp](double s) { return interp(s); }, order, u.grid.a,
                    t, quad_tol, report);
}

double ab_integral(const ScalarFn& u, const FractionalOrder& order, double a,
                   double t, double quad_tol) {
  if (!(t >= a)) throw DomainError("ab_integral requires t >= a");
  const double alpha = order.alpha;
  const double front = (1.0 - alpha) / order.b_alpha * u(t);
  if (t == a) return front;
  auto integrand = [&](double w) { return u(t - std::pow(w, 1.0 / alpha)); };
  const double scale = reciprocal_gamma(alpha) / order.b_alpha;
  const double q = integrate_or_throw(integrand, 0.0, std::pow(t - a, alpha),
                                      quad_tol / std::max(scale, 1e-6));
  return front + scale * q;
}

std::vector<double> discrete_l_weights(const FractionalOrder& order, double tau,
                                       int kappa) {
  std::vector<double> w(kappa + 1, 0.0);
  const MLParams paa{order.alpha, order.alpha};
  const double ta = std::pow(tau, order.alpha);
  for (int m = 1; m <= kappa; ++m) {
    w[m] = mittag_leffler(paa, order.c * ta * std::pow((double)m, order.alpha)) *
           std::pow((double)m, order.alpha - 1.0);
  }
  return w;
}

double discrete_l_from_weights(const TimeSeries& u, const FractionalOrder& order,
                               const std::vector<double>& weights, int k) {
  if (k < 0 || k > u.grid.kappa) throw DomainError("discrete_l: k out of range");
  if (k == 0) return 0.0;
  const double uk = u.values[k];
  double acc = 0.0;
  for (int i = k - 1; i >= 0; --i) {
    acc += weights[k - i] * (uk - u.values[i]);
  }
  return std::pow(u.grid.tau, order.alpha) * order.c_alpha * acc;
}

double discrete_l(const TimeSeries& u, const FractionalOrder& order, int k) {
  if (k < 0 || k > u.grid.kappa) throw DomainError("discrete_l: k out of range");
  if (k == 0) return 0.0;
  const auto w = discrete_l_weights(order, u.grid.tau, k);
  return discrete_l_from_weights(u, order, w, k);
}

std::vector<double> discrete_l_all_serial(const TimeSeries& u,
                                          const FractionalOrder& order) {
  const int kappa = u.grid.kappa;
  const auto w = discrete_l_weights(order, u.grid.tau, kappa);
  std::vector<double> out(kappa + 1, 0.0);
  for (int k = 1; k <= kappa; ++k) {
    out[k] = discrete_l_from_weights(u, order, w, k);
  }
  return out;
}

std::vector<double> discrete_l_all(const TimeSeries& u,
                                   const FractionalOrder& order) {
  const int kappa = u.grid.kappa;
  const auto w = discrete_l_weights(order, u.grid.tau, kappa);
  std::vector<double> out(kappa + 1, 0.0);
  // interleaved chunks balance the triangular per-k cost across threads
#pragma omp parallel for schedule(static, 8)
  for (int k = 1; k <= kappa; ++k) {
    out[k] = discrete_l_from_weights(u, order, w, k);
  }
  return out;
}

double discrete_l_history_closure(const TimeSeries& u,
                                  const FractionalOrder& order, int k) {
  if (k < 0 || k > u.grid.kappa) throw DomainError("history closure: k out of range");
  if (k == 0) return 0.0;
  const double gap = k * u.grid.tau;
  return order.nu_alpha *
         ml_one_param(order.alpha, order.c * std::pow(gap, order.alpha)) *
         (u.values[k] - u.values[0]);
}

}  // namespace fracml
