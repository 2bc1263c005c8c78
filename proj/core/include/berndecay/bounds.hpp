#pragma once

// Off-diagonal decay bounds for Bernstein functions of Hermitian positive
// (semi)definite matrices: exponential entry bounds, integral bounds
// evaluated by quadrature against the Levy measure, closed-form bounds for
// fractional powers, the Cauchy-Stieltjes product bound with its sharpened
// variant, the Jackson-type comparison bound, asymptotic constants and a
// power-law slope fit.  All evaluators are pure and deterministic.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "berndecay/quadrature.hpp"

namespace berndecay {

/// Fractional power z^alpha, alpha in (0,1), as a strong type.
struct FracPowerSpec {
    explicit FracPowerSpec(double a);
    double alpha;
};

/// A Bernstein function f(z) = a + b z + int_0^inf (1 - e^{-t z}) dmu(t)
/// represented by its Levy triple.  log_density is required by the bound
/// evaluators so that densities with strong singularities at the origin
/// can be combined with other factors without overflow.
struct LevyTriple {
    double a = 0.0;
    double b = 0.0;
    std::function<double(double)> density;
    std::function<double(double)> log_density; // -inf where density vanishes
    std::string label;
};

enum class BoundKind {
    exp_semidef,
    exp_posdef,
    quad_semidef,
    quad_posdef,
    closed_frac,
    closed_sqrt,
    stieltjes,
    stieltjes_sharp,
    jackson,
    trivial_cap,
};

std::string to_string(BoundKind k);
BoundKind bound_kind_from_string(const std::string& token);

struct BoundValue {
    double value = 0.0;
    BoundKind kind = BoundKind::quad_semidef;
    std::optional<double> quad_err;              // present for quadrature kinds
    std::optional<std::array<double, 3>> terms;  // per-term breakdown where applicable
};

namespace bounds {

struct QuadTolerances {
    double rel_tol = quad::kDefaultRelTol;
    double abs_tol = quad::kDefaultAbsTol;
};

/// Levy triple of z^alpha: a = b = 0, density alpha/Gamma(1-alpha) t^{-alpha-1}.
LevyTriple levy_frac_power(FracPowerSpec alpha);

/// Checks a, b >= 0 and int_0^inf min(t,1) dmu < inf by quadrature.
/// Returns the value of that integral.
double validate_levy_triple(const LevyTriple& levy, QuadTolerances tol = {});

/// f(z) = a + b z + int (1 - e^{-t z}) dmu(t) by quadrature, z >= 0.
double bernstein_eval(const LevyTriple& levy, double z, QuadTolerances tol = {});

/// Entry bound for exp(-t A), A positive semidefinite with spectrum in
/// [0, 4 rho].  Regime (i) (rho t >= 1 and sqrt(4 rho t) <= d < 2 rho t):
/// 10 exp(-d^2/(5 rho t)); regime (ii) (d >= 2 rho t):
/// 10 exp(-rho t)/(rho t) (e rho t / d)^d, evaluated in log space.
/// Returns nullopt when neither regime applies.
std::optional<double> exp_entry_bound_semidef(double rho, double t, int d);

/// Shifted variant for positive definite A: rho = (lambda_max-lambda_min)/4
/// and every regime value picks up the factor exp(-t lambda_min).
std::optional<double> exp_entry_bound_posdef(double lambda_min, double lambda_max,
                                             double t, int d);

/// Integral bound for [f(A)]_ij, A positive semidefinite with spectral
/// radius rho_A and d = d(i,j) >= 2: three quadratures against the Levy
/// measure with breakpoints 2d/rho_A and d^2/rho_A; the tail integrand uses
/// |[exp(-tA)]_ij| <= 1.
BoundValue bernstein_bound_semidef(const LevyTriple& levy, double rho_A, int d,
                                   QuadTolerances tol = {});

/// Positive definite variant with rho = (lambda_max - lambda_min)/4,
/// breakpoints d/(2 rho) and d^2/(4 rho), and exp(-t lambda_min) damping.
BoundValue bernstein_bound_posdef(const LevyTriple& levy, double lambda_min,
                                  double lambda_max, int d, QuadTolerances tol = {});

/// Closed form of the semidefinite bound for z^alpha: the prefactor
/// alpha/Gamma(1-alpha) times
///   10 e^d rho^alpha / (4^alpha d^d) gamma(d-alpha-1, d/2)
/// + 10 (5 rho/(4 d^2))^alpha (Gamma(alpha,4/5) - Gamma(alpha,2d/5))
/// + rho^alpha / (alpha d^{2 alpha}),
/// first term in log space (finite for d up to 1e4).
BoundValue frac_bound_closed_semidef(FracPowerSpec alpha, double rho_A, int d);

/// The alpha = 1/2 specialization written with erfc.  Matches
/// frac_bound_closed_semidef(1/2, .) to roundoff.
BoundValue sqrt_bound_closed_semidef(double rho_A, int d);

/// Cauchy-Stieltjes product bound for A^alpha, A positive definite:
/// 2 lambda_min^{alpha-1} ||A||_inf q^{d-1}, q = (sqrt(k)-1)/(sqrt(k)+1),
/// k = lambda_max/lambda_min.  Rejects lambda_min <= 0.
BoundValue stieltjes_bound(FracPowerSpec alpha, double lambda_min, double lambda_max,
                           double inf_norm_A, int d);

/// Sharpened variant with min(||A_{i:}||_1, ||A_{:j}||_1) in place of
/// ||A||_inf.
BoundValue stieltjes_bound_sharp(FracPowerSpec alpha, double lambda_min,
                                 double lambda_max, double row_norm_i,
                                 double col_norm_j, int d);

/// Jackson-type comparison bound: (1 + pi^2/2) (rho_L/2)^alpha (d-1)^{-alpha}.
BoundValue jackson_bound(FracPowerSpec alpha, double rho_L, int d);

/// Coefficient C of the asymptotic tail C d^{-2 alpha} of the closed bound:
/// alpha/Gamma(1-alpha) (10 (5 rho/4)^alpha Gamma(alpha, 4/5) + rho^alpha/alpha).
double asymptotic_constant(FracPowerSpec alpha, double rho_L);

/// The alpha = 1/2 form (5/2) sqrt(5 rho) erfc(sqrt(4/5)) + sqrt(rho/pi);
/// agrees with asymptotic_constant(1/2, rho).
double asymptotic_constant_sqrt(double rho_L);

/// Least-squares slope of log(value) against log(d) over the points with
/// d >= d_min.  Requires at least 5 such points, all values positive.
double fit_powerlaw_slope(std::span<const std::pair<double, double>> points, int d_min);

} // namespace bounds

} // namespace berndecay
