#pragma once

// Scalar special-function kernel: gamma, log-gamma, upper/lower incomplete
// gamma (including negative first parameter and log-space variants for
// large parameters), erf and erfc.  All functions are pure and reentrant.

namespace berndecay::specfun {

/// ln Gamma(x) for x > 0.  Relative error <= 1e-13 on [1e-6, 1e6].
double ln_gamma(double x);

/// Gamma(x) for x not in {0, -1, -2, ...}; negative x via reflection.
double gamma(double x);

/// Upper incomplete gamma Gamma(s, x), x > 0, s in (-1,0) or s > 0.
/// The negative range uses the recurrence
///   Gamma(s, x) = (Gamma(s+1, x) - x^s e^{-x}) / s.
double upper_inc_gamma(double s, double x);

/// Lower incomplete gamma gamma(s, x), s > 0, x >= 0.
double lower_inc_gamma(double s, double x);

/// ln gamma(s, x), s > 0, x > 0.  Stays finite where gamma(s, x) itself
/// would overflow; usable for s up to 1e4.
double ln_lower_inc_gamma(double s, double x);

double erf(double x);
double erfc(double x);

} // namespace berndecay::specfun
