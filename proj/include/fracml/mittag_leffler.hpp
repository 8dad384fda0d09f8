#pragma once

#include <string>

namespace fracml {

/// Orders of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MLParams {
  double alpha;
  double beta;
};

/// Evaluation result with the method actually used and a relative error
/// estimate (truncation + rounding model, not a rigorous bound).
struct MLEval {
  double value;
  const char* method;  // "closed_form" | "series" | "integral" | "asymptotic"
  double est_error;
};

/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta) on the real line.
///
/// Method selection on the negative axis (0 < alpha < 1): Taylor series in
/// compensated extended precision while the largest series term stays small
/// enough that cancellation cannot eat the target accuracy, the spectral
/// integral representation in the mid range, and the algebraic-decay
/// asymptotic expansion E_{alpha,beta}(-x) ~ sum_m (-1)^{m+1} x^{-m} /
/// Gamma(beta - alpha m) for large x. The switch radii are alpha-dependent;
/// see ml_series_radius / ml_asymptotic_radius.
///
/// Throws DomainError for alpha <= 0, beta <= 0 or non-finite z, and
/// OverflowError for positive z beyond the representable threshold
/// (threshold reported in the message).
MLEval mittag_leffler_detailed(const MLParams& params, double z);

/// Value-only convenience wrapper.
double mittag_leffler(const MLParams& params, double z);

/// E_alpha(z) := E_{alpha,1}(z).
double ml_one_param(double alpha, double z);

/// Series is used for -z in [0, ml_series_radius]; the asymptotic expansion
/// from ml_asymptotic_radius on; the integral representation in between
/// (alpha in (0,1)). Exposed so the crossover agreement is testable.
double ml_series_radius(double alpha);
double ml_asymptotic_radius(double alpha);

namespace ml_internal {
// Single-method evaluators for crossover tests and diagnostics. No domain
// checks; beta may be any real for the internal reduction paths.
MLEval eval_series(double alpha, double beta, double z);
MLEval eval_integral_rep(double alpha, double beta, double neg_x);
MLEval eval_asymptotic(double alpha, double beta, double neg_x);
}  // namespace ml_internal

}  // namespace fracml
