#pragma once

// Adaptive numerical quadrature on finite and semi-infinite intervals.
// The underlying rule is tanh-sinh with level doubling, so endpoints are
// never evaluated and integrable endpoint singularities (smooth * t^-beta,
// beta < 1) are handled without help from the caller.  Panels that fail to
// converge at the maximum level are bisected.

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace berndecay::quad {

struct QuadResult {
    double value = 0.0;
    double abs_err_est = 0.0;
    std::int64_t evaluations = 0;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultRelTol = 1e-8;
inline constexpr double kDefaultAbsTol = 1e-14;
inline constexpr std::int64_t kDefaultMaxEvals = 1'000'000;

/// Integrate f over the finite interval (a, b).  The endpoints are never
/// evaluated.  Throws QuadratureError if the error estimate cannot reach
/// max(abs_tol, rel_tol * |integral|) within the evaluation budget, or if
/// f produces a non-finite value at an interior point.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = kDefaultRelTol, double abs_tol = kDefaultAbsTol,
                     std::int64_t max_evals = kDefaultMaxEvals);

/// Integrate f over [a, infinity) for integrands with integrable decay
/// (exponential, or power law with exponent < -1).  Uses the substitution
/// t = a + u/(1-u) onto (0, 1).
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                 double rel_tol = kDefaultRelTol,
                                 double abs_tol = kDefaultAbsTol,
                                 std::int64_t max_evals = kDefaultMaxEvals);

} // namespace berndecay::quad
