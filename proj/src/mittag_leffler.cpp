#include "fracml/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fracml/errors.hpp"
#include "fracml/gamma.hpp"
#include "fracml/quadrature.hpp"

namespace fracml {

namespace {

constexpr double kLdEps = 5.42e-20;  // 80-bit long double ulp
constexpr double kExpOverflow = 700.0;

// Largest tolerable magnitude of the series' peak term, as an exponent of e.
// Above it, cancellation against the O(1)-or-smaller result costs more
// digits than compensated extended-precision summation can pay back.
double series_cancellation_cap(double alpha) { return alpha < 1.0 ? 6.5 : 8.5; }

struct NeumaierSum {
  long double s = 0.0L;
  long double comp = 0.0L;
  void add(long double t) {
    const long double tt = s + t;
    if (std::fabs((double)s) >= std::fabs((double)t)) {
      comp += (s - tt) + t;
    } else {
      comp += (t - tt) + s;
    }
    s = tt;
  }
  long double total() const { return s + comp; }
};

}  // namespace

double ml_series_radius(double alpha) {
  return std::pow(series_cancellation_cap(alpha), alpha);
}

double ml_asymptotic_radius(double alpha) { return std::pow(40.0, alpha); }

namespace ml_internal {

MLEval eval_series(double alpha, double beta, double z) {
  if (z == 0.0) {
    return {reciprocal_gamma(beta), "series", 1.1e-16};
  }
  const long double lx = std::log(std::abs((long double)z));
  const bool negative = z < 0.0;
  NeumaierSum sum;
  long double noise = 0.0L;  // accumulated term rounding, absolute
  long double last = 0.0L;
  const double turnover = std::pow(std::abs(z), 1.0 / alpha);
  const long max_terms = 2'000'000;
  long k = 0;
  for (; k < max_terms; ++k) {
    // the Gamma argument must be formed in extended precision: a double
    // product alpha*k already shifts Gamma by ~psi(arg)*ulp, which the
    // cancellation-amplified sum turns into ~1e-11 errors
    const long double arg =
        (long double)alpha * (long double)k + (long double)beta;
    const long double expo = (long double)k * lx - std::lgamma(arg);
    const long double mag = std::exp(expo);
    last = mag;
    sum.add((negative && (k & 1)) ? -mag : mag);
    noise += mag * kLdEps * (4.0L + std::fabs((double)expo));
    // stop once past the term peak and below the compensated sum's noise
    if (alpha * k + beta > turnover && k > 2 &&
        mag < 0.25L * kLdEps * std::max(std::fabs(sum.total()), (long double)1e-300)) {
      break;
    }
  }
  const double value = (double)sum.total();
  const double abs_noise = (double)(last + noise) + 1.1e-16 * std::abs(value);
  const double denom = std::max(std::abs(value), 1e-300);
  return {value, "series", abs_noise / denom};
}

// Spectral (real-line) integral representation for 0 < alpha < 1, z = -x < 0,
// beta <= 1:
//   E_{a,b}(-x) = int_0^inf K(r) dr,
//   K(r) = (1/(pi a)) r^{(1-b)/a} exp(-r^{1/a})
//          * [r sin(pi(1-b)) + x sin(pi(1-b+a))] / (r^2 + 2 r x cos(pi a) + x^2).
// The denominator's minimum sharpens towards r = x as alpha -> 1, so the
// panel layout brackets it explicitly before adaptive refinement.
MLEval eval_integral_rep(double alpha, double beta, double neg_x) {
  const double x = -neg_x;
  const double sb = std::sin(M_PI * (1.0 - beta));
  const double sba = std::sin(M_PI * (1.0 - beta + alpha));
  const double ca = std::cos(M_PI * alpha);
  const double pow_exp = (1.0 - beta) / alpha;
  auto kernel = [&](double r) -> double {
    if (r <= 0.0) return beta < 1.0 ? 0.0 : sba / (M_PI * alpha * x);
    const double num = r * sb + x * sba;
    const double den = (r + x * ca) * (r + x * ca) + x * x * (1.0 - ca * ca);
    return std::pow(r, pow_exp) * std::exp(-std::pow(r, 1.0 / alpha)) * num /
           (M_PI * alpha * den);
  };
  const double u_cut = std::pow(x, 1.0 / alpha) + 46.0;
  const double r_cut = std::pow(u_cut, alpha);
  // panel breakpoints around the possible denominator dip at r ~ x|cos(pi a)|
  double pts[8];
  int npts = 0;
  pts[npts++] = 0.0;
  const double rstar = (ca < 0.0) ? -x * ca : x;
  for (double frac : {0.5, 0.9, 1.0, 1.1, 1.5, 3.0}) {
    const double p = rstar * frac;
    if (p > 0.0 && p < r_cut) pts[npts++] = p;
  }
  pts[npts++] = r_cut;
  double coarse = 0.0;
  for (int i = 0; i + 1 < npts; ++i) {
    coarse += integrate(kernel, pts[i], pts[i + 1], 1e-8, 400).value;
  }
  const double tol = std::max(1e-18, 2e-15 * std::abs(coarse));
  double value = 0.0;
  double err = 0.0;
  for (int i = 0; i + 1 < npts; ++i) {
    QuadResult q = integrate(kernel, pts[i], pts[i + 1], tol / npts, 3000);
    value += q.value;
    err += q.error_estimate;
  }
  const double tail = std::exp(-u_cut) * std::max(1.0, std::abs(sb) + std::abs(sba));
  const double denom = std::max(std::abs(value), 1e-300);
  return {value, "integral", (err + tail) / denom};
}

MLEval eval_asymptotic(double alpha, double beta, double neg_x) {
  const double x = -neg_x;
  const double lx = std::log(x);
  // |1/Gamma(beta - alpha m)| <= Gamma(1 - beta + alpha m) / pi by reflection,
  // so env(m) = x^{-m} Gamma(1 - beta + alpha m) / pi envelopes the terms
  // through the sin oscillation (terms at gamma poles are exactly zero and
  // must not be mistaken for convergence). Truncate at the envelope minimum.
  auto log_env = [&](int m) {
    const double arg = 1.0 - beta + alpha * m;
    const double lg = arg > 0.5 ? log_gamma(arg) : 0.0;
    return -m * lx + lg - std::log(M_PI);
  };
  int m_stop = 200;
  double env_min = std::numeric_limits<double>::max();
  for (int m = 1; m <= 200; ++m) {
    const double le = log_env(m);
    if (le < env_min) {
      env_min = le;
    } else if (le > env_min + 0.5) {
      m_stop = m - 1;
      break;
    }
  }
  double sum = 0.0;
  double xm = 1.0 / x;
  for (int m = 1; m <= m_stop; ++m) {
    const double term = xm * reciprocal_gamma(beta - alpha * m);
    sum += (m & 1) ? term : -term;
    xm /= x;
    if (std::abs(term) > 0.0 && std::abs(term) < 1e-19 * std::abs(sum)) {
      m_stop = m;
      break;
    }
  }
  const double trunc = std::exp(log_env(m_stop + 1));
  const double denom = std::max(std::abs(sum), 1e-300);
  return {sum, "asymptotic", (trunc + 4e-16 * std::abs(sum)) / denom};
}

}  // namespace ml_internal

namespace {

using ml_internal::eval_asymptotic;
using ml_internal::eval_integral_rep;
using ml_internal::eval_series;

// beta > 1 drops below the integral representation's validity range via
// E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z, applied in reverse.
MLEval eval_negative_by_integral(double alpha, double beta, double z) {
  int steps = 0;
  double beta_low = beta;
  while (beta_low > 1.0 && steps < 1000) {
    beta_low -= alpha;
    ++steps;
  }
  MLEval e = eval_integral_rep(alpha, beta_low, z);
  double abs_err = e.est_error * std::abs(e.value);
  double value = e.value;
  for (int i = 0; i < steps; ++i) {
    const double b_cur = beta_low + alpha * i;
    value = (value - reciprocal_gamma(b_cur)) / z;
    abs_err = abs_err / std::abs(z) + 4e-16 * std::abs(value);
  }
  const double denom = std::max(std::abs(value), 1e-300);
  return {value, "integral", abs_err / denom};
}

MLEval closed_form(double value) { return {value, "closed_form", 1.1e-16}; }

MLEval eval_any(double alpha, double beta, double z) {
  // closed forms keep the hot (alpha, beta) pairs exact
  if (alpha == 1.0 && beta == 1.0) return closed_form(std::exp(z));
  if (alpha == 2.0 && beta == 1.0) {
    return closed_form(z < 0.0 ? std::cos(std::sqrt(-z)) : std::cosh(std::sqrt(z)));
  }
  if (alpha == 1.0 && beta == 2.0) {
    return closed_form(z == 0.0 ? 1.0 : std::expm1(z) / z);
  }
  if (alpha == 2.0 && beta == 2.0 && z != 0.0) {
    const double s = std::sqrt(std::abs(z));
    return closed_form(z < 0.0 ? std::sin(s) / s : std::sinh(s) / s);
  }
  if (z == 0.0) return closed_form(reciprocal_gamma(beta));

  if (z > 0.0) {
    const double log_arg = std::pow(z, 1.0 / alpha);
    if (log_arg > kExpOverflow) {
      throw OverflowError(
          "mittag_leffler overflow for positive z = " + std::to_string(z) +
          "; representable threshold is z <= " +
          std::to_string(std::pow(kExpOverflow, alpha)) + " at alpha = " +
          std::to_string(alpha));
    }
    return eval_series(alpha, beta, z);
  }

  const double x = -z;
  if (x <= ml_series_radius(alpha)) return eval_series(alpha, beta, z);
  if (alpha < 1.0) {
    if (x >= ml_asymptotic_radius(alpha)) return eval_asymptotic(alpha, beta, z);
    return eval_negative_by_integral(alpha, beta, z);
  }
  if (alpha < 2.0) {
    // no spectral representation here; take whichever estimate is tighter
    MLEval a = eval_asymptotic(alpha, beta, z);
    if (std::pow(x, 1.0 / alpha) < series_cancellation_cap(alpha) + 6.0) {
      MLEval s = eval_series(alpha, beta, z);
      if (s.est_error < a.est_error) return s;
    }
    return a;
  }
  return eval_series(alpha, beta, z);  // alpha >= 2: series stays mild
}

}  // namespace

MLEval mittag_leffler_detailed(const MLParams& params, double z) {
  if (!(params.alpha > 0.0) || !(params.beta > 0.0)) {
    throw DomainError("mittag_leffler requires alpha > 0 and beta > 0");
  }
  if (!std::isfinite(z)) {
    throw DomainError("mittag_leffler requires finite z");
  }
  return eval_any(params.alpha, params.beta, z);
}

double mittag_leffler(const MLParams& params, double z) {
  return mittag_leffler_detailed(params, z).value;
}

double ml_one_param(double alpha, double z) {
  return mittag_leffler({alpha, 1.0}, z);
}

}  // namespace fracml
