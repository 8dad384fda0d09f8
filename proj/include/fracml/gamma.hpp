#pragma once

namespace fracml {

/// Gamma function on the real line, Lanczos approximation with reflection
/// for negative arguments. Poles at non-positive integers return +/-inf.
double gamma_fn(double x);

/// log|Gamma(x)|.
double log_gamma(double x);

/// 1/Gamma(x); exactly 0 at the poles (non-positive integers), which is the
/// value the reciprocal takes in the limit. Safe inside series coefficients.
double reciprocal_gamma(double x);

}  // namespace fracml
