#include "fracml/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracml/errors.hpp"
#include "fracml/gamma.hpp"
#include "fracml/mittag_leffler.hpp"

namespace fracml {

FractionalOrder FractionalOrder::make(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw DomainError("fractional order requires alpha in (0,1)");
  }
  FractionalOrder o;
  o.alpha = alpha;
  o.b_alpha = 1.0 - alpha + alpha * reciprocal_gamma(alpha);
  o.c = -alpha / (1.0 - alpha);
  o.nu_alpha = o.b_alpha / (1.0 - alpha);
  o.c_alpha = -o.c * o.nu_alpha;
  return o;
}

TimeKernelSpec TimeKernelSpec::make(FractionalOrder order, double horizon,
                                    TimeKernelKind kind) {
  if (!(horizon > 0.0)) throw DomainError("time kernel horizon must be > 0");
  return TimeKernelSpec{order, horizon, kind};
}

double TimeKernelSpec::eval_gap(double gap) const {
  if (!(gap > 0.0)) throw DomainError("time kernel requires s < t");
  if (gap > horizon * (1.0 + 1e-12)) {
    throw DomainError("time kernel gap exceeds the verification horizon");
  }
  const double a = order.alpha;
  if (kind == TimeKernelKind::caputo_power_kernel) {
    return std::pow(gap, a - 1.0) * reciprocal_gamma(a);
  }
  return std::pow(gap, a - 1.0) *
         mittag_leffler({a, a}, order.c * std::pow(gap, a));
}

double TimeKernelSpec::eval(double t, double s) const { return eval_gap(t - s); }

SpatialKernelSpec SpatialKernelSpec::make(int dim, double sigma, double lambda,
                                          double Lambda,
                                          double normalization) {
  if (dim < 1) throw DomainError("spatial kernel dimension must be >= 1");
  if (!(sigma > kSigma0) || !(sigma < 2.0)) {
    throw DomainError("spatial kernel requires sigma in (0.1, 2)");
  }
  if (!(lambda > 0.0) || !(Lambda >= lambda)) {
    throw DomainError("ellipticity constants require 0 < lambda <= Lambda");
  }
  if (!(normalization > 0.0)) {
    throw DomainError("spatial kernel normalization must be > 0");
  }
  return SpatialKernelSpec{dim, sigma, lambda, Lambda, normalization};
}

double SpatialKernelSpec::eval(std::span<const double> h) const {
  if ((int)h.size() != dim) {
    throw DomainError("spatial kernel argument has wrong dimension");
  }
  double norm2 = 0.0;
  for (double v : h) norm2 += v * v;
  if (norm2 == 0.0) throw DomainError("spatial kernel is singular at h = 0");
  return normalization * std::pow(norm2, -0.5 * (dim + sigma));
}

double SpatialKernelSpec::eval1d(double h) const {
  const double v[1] = {h};
  return eval(std::span<const double>(v, 1));
}

EnvelopeReport verify_time_kernel_envelope(const TimeKernelSpec& spec,
                                           int n_samples) {
  if (n_samples < 2) throw DomainError("envelope check needs n_samples >= 2");
  const double a = spec.order.alpha;
  const double gamma_a1 = gamma_fn(a + 1.0);
  const double minus_c = -spec.order.c;
  // log-spaced gaps over six decades up to the horizon
  const double gap_min = spec.horizon * 1e-6;
  EnvelopeReport rep;
  rep.grid.resize(n_samples);
  rep.ratio.resize(n_samples);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double f = (double)i / (double)(n_samples - 1);
    const double gap = gap_min * std::pow(spec.horizon / gap_min, f);
    const double rho =
        spec.eval_gap(gap) * gamma_a1 / std::pow(gap, a - 1.0);
    rep.grid[i] = gap;
    rep.ratio[i] = rho;
    lo = std::min(lo, rho);
    hi = std::max(hi, rho);
  }
  rep.lambda_emp = lo / minus_c;
  rep.Lambda_emp = hi / minus_c;
  rep.holds = rep.lambda_emp > 0.0 && rep.Lambda_emp >= rep.lambda_emp &&
              std::isfinite(rep.Lambda_emp);
  return rep;
}

bool verify_time_symmetry(const TimeKernelSpec& spec,
                          std::span<const std::pair<double, double>> samples) {
  return verify_time_symmetry_generic(
      [&spec](double t, double s) { return spec.eval(t, s); }, samples);
}

}  // namespace fracml
