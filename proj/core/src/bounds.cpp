#include "berndecay/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "berndecay/specfun.hpp"

namespace berndecay {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void domain_fail(const std::string& what) {
    throw std::domain_error("bounds: " + what);
}

std::string format_alpha(double alpha) {
    std::ostringstream os;
    os << alpha;
    return os.str();
}

} // namespace

FracPowerSpec::FracPowerSpec(double a) : alpha(a) {
    if (!(a > 0.0 && a < 1.0)) {
        throw std::domain_error("FracPowerSpec: alpha must be in (0,1)");
    }
}

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::exp_semidef: return "expsemidef";
        case BoundKind::exp_posdef: return "expposdef";
        case BoundKind::quad_semidef: return "quadsemidef";
        case BoundKind::quad_posdef: return "quadposdef";
        case BoundKind::closed_frac: return "closedfrac";
        case BoundKind::closed_sqrt: return "closedsqrt";
        case BoundKind::stieltjes: return "stieltjes";
        case BoundKind::stieltjes_sharp: return "stieltjessharp";
        case BoundKind::jackson: return "jackson";
        case BoundKind::trivial_cap: return "trivialcap";
    }
    return "unknown";
}

BoundKind bound_kind_from_string(const std::string& token) {
    if (token == "expsemidef") return BoundKind::exp_semidef;
    if (token == "expposdef") return BoundKind::exp_posdef;
    if (token == "quadsemidef") return BoundKind::quad_semidef;
    if (token == "quadposdef") return BoundKind::quad_posdef;
    if (token == "closedfrac") return BoundKind::closed_frac;
    if (token == "closedsqrt") return BoundKind::closed_sqrt;
    if (token == "stieltjes") return BoundKind::stieltjes;
    if (token == "stieltjessharp") return BoundKind::stieltjes_sharp;
    if (token == "jackson") return BoundKind::jackson;
    if (token == "trivialcap") return BoundKind::trivial_cap;
    throw std::invalid_argument("unknown bound kind '" + token + "'");
}

namespace bounds {

LevyTriple levy_frac_power(FracPowerSpec spec) {
    const double alpha = spec.alpha;
    const double c = alpha / specfun::gamma(1.0 - alpha);
    const double ln_c = std::log(c);
    LevyTriple levy;
    levy.a = 0.0;
    levy.b = 0.0;
    levy.density = [c, alpha](double t) { return c * std::pow(t, -alpha - 1.0); };
    levy.log_density = [ln_c, alpha](double t) { return ln_c - (alpha + 1.0) * std::log(t); };
    levy.label = "frac:" + format_alpha(alpha);
    validate_levy_triple(levy);
    return levy;
}

double validate_levy_triple(const LevyTriple& levy, QuadTolerances tol) {
    if (levy.a < 0.0 || levy.b < 0.0) domain_fail("levy triple requires a, b >= 0");
    if (!levy.density || !levy.log_density) domain_fail("levy triple requires density and log_density");
    // int_0^inf min(t,1) dmu = int_0^1 t rho(t) dt + int_1^inf rho(t) dt
    try {
        const auto& ld = levy.log_density;
        auto head = quad::integrate(
            [&ld](double t) { return std::exp(ld(t) + std::log(t)); }, 0.0, 1.0,
            tol.rel_tol, tol.abs_tol);
        auto tail = quad::integrate_to_infinity(
            [&ld](double t) { return std::exp(ld(t)); }, 1.0, tol.rel_tol, tol.abs_tol);
        const double total = head.value + tail.value;
        if (!std::isfinite(total)) domain_fail("levy measure fails the min(t,1) integrability check");
        return total;
    } catch (const quad::QuadratureError& e) {
        domain_fail(std::string("levy measure integrability check failed: ") + e.what());
    }
}

double bernstein_eval(const LevyTriple& levy, double z, QuadTolerances tol) {
    if (!(z >= 0.0)) domain_fail("bernstein_eval requires z >= 0");
    double f = levy.a + levy.b * z;
    if (z == 0.0) return levy.a;
    const auto& ld = levy.log_density;
    auto integrand = [&ld, z](double t) {
        // (1 - e^{-t z}) rho(t) combined in log space
        return std::exp(ld(t) + std::log(-std::expm1(-t * z)));
    };
    auto head = quad::integrate(integrand, 0.0, 1.0, tol.rel_tol, tol.abs_tol);
    auto tail = quad::integrate_to_infinity(integrand, 1.0, tol.rel_tol, tol.abs_tol);
    return f + head.value + tail.value;
}

std::optional<double> exp_entry_bound_semidef(double rho, double t, int d) {
    if (!(rho > 0.0)) domain_fail("exp_entry_bound_semidef requires rho > 0");
    if (!(t > 0.0)) domain_fail("exp_entry_bound_semidef requires t > 0");
    if (d < 1) domain_fail("exp_entry_bound_semidef requires d >= 1");
    const double rt = rho * t;
    const double dd = static_cast<double>(d);
    if (dd >= 2.0 * rt) {
        // regime (ii), log space: ln 10 - rt - ln(rt) + d (1 + ln(rt) - ln d)
        const double ln_rt = std::log(rt);
        return std::exp(std::log(10.0) - rt - ln_rt + dd * (1.0 + ln_rt - std::log(dd)));
    }
    if (rt >= 1.0 && dd * dd >= 4.0 * rt) {
        // regime (i): sqrt(4 rt) <= d < 2 rt
        return 10.0 * std::exp(-dd * dd / (5.0 * rt));
    }
    return std::nullopt;
}

std::optional<double> exp_entry_bound_posdef(double lambda_min, double lambda_max,
                                             double t, int d) {
    if (!(lambda_min > 0.0)) domain_fail("exp_entry_bound_posdef requires lambda_min > 0");
    if (!(lambda_max >= lambda_min)) domain_fail("exp_entry_bound_posdef requires lambda_max >= lambda_min");
    if (!(t > 0.0)) domain_fail("exp_entry_bound_posdef requires t > 0");
    if (d < 1) domain_fail("exp_entry_bound_posdef requires d >= 1");
    const double rho = 0.25 * (lambda_max - lambda_min);
    const double rt = rho * t;
    const double dd = static_cast<double>(d);
    if (dd >= 2.0 * rt) {
        if (rt == 0.0) {
            // lambda_min == lambda_max: the off-pattern exponential vanishes
            return d >= 2 ? 0.0 : std::exp(std::log(10.0) + 1.0 - std::log(dd) - t * lambda_min);
        }
        const double ln_rt = std::log(rt);
        return std::exp(std::log(10.0) - (rho + lambda_min) * t - ln_rt +
                        dd * (1.0 + ln_rt - std::log(dd)));
    }
    if (rt >= 1.0 && dd * dd >= 4.0 * rt) {
        return 10.0 * std::exp(-t * lambda_min - dd * dd / (5.0 * rt));
    }
    return std::nullopt;
}

namespace {

struct IntegralPiece {
    double value = 0.0;
    double err = 0.0;
};

IntegralPiece run_quad(const std::function<double(double)>& f, double a, double b,
                       bool to_infinity, QuadTolerances tol, const char* which) {
    try {
        quad::QuadResult r;
        if (to_infinity) {
            r = quad::integrate_to_infinity(f, a, tol.rel_tol, tol.abs_tol);
        } else {
            if (!(a < b)) return {};
            r = quad::integrate(f, a, b, tol.rel_tol, tol.abs_tol);
        }
        return {r.value, r.abs_err_est};
    } catch (const quad::QuadratureError& e) {
        throw quad::QuadratureError(std::string(which) + ": " + e.what());
    }
}

} // namespace

BoundValue bernstein_bound_semidef(const LevyTriple& levy, double rho_A, int d,
                                   QuadTolerances tol) {
    if (!(rho_A > 0.0)) domain_fail("bernstein_bound_semidef requires rho_A > 0");
    if (d < 2) domain_fail("bernstein_bound_semidef requires d >= 2");
    const double dd = static_cast<double>(d);
    const double b1 = 2.0 * dd / rho_A;
    const double b2 = dd * dd / rho_A;
    const auto& ld = levy.log_density;

    const double ln40 = std::log(40.0);
    const double ln10 = std::log(10.0);
    const double ln4d = std::log(4.0 * dd);
    auto f1 = [&ld, rho_A, dd, ln40, ln4d](double t) {
        const double ln_rt = std::log(rho_A * t);
        return std::exp(ln40 - 0.25 * rho_A * t - ln_rt + dd * (1.0 + ln_rt - ln4d) + ld(t));
    };
    auto f2 = [&ld, rho_A, dd, ln10](double t) {
        return std::exp(ln10 - 4.0 * dd * dd / (5.0 * rho_A * t) + ld(t));
    };
    auto f3 = [&ld](double t) { return std::exp(ld(t)); };

    const auto i1 = run_quad(f1, 0.0, b1, false, tol, "bernstein_bound_semidef first integral");
    const auto i2 = run_quad(f2, b1, b2, false, tol, "bernstein_bound_semidef second integral");
    const auto i3 = run_quad(f3, b2, 0.0, true, tol, "bernstein_bound_semidef third integral");

    BoundValue out;
    out.kind = BoundKind::quad_semidef;
    out.value = i1.value + i2.value + i3.value;
    out.quad_err = i1.err + i2.err + i3.err;
    out.terms = {{i1.value, i2.value, i3.value}};
    return out;
}

BoundValue bernstein_bound_posdef(const LevyTriple& levy, double lambda_min,
                                  double lambda_max, int d, QuadTolerances tol) {
    if (!(lambda_min > 0.0)) domain_fail("bernstein_bound_posdef requires lambda_min > 0");
    if (!(lambda_max > lambda_min)) domain_fail("bernstein_bound_posdef requires lambda_max > lambda_min");
    if (d < 2) domain_fail("bernstein_bound_posdef requires d >= 2");
    const double rho = 0.25 * (lambda_max - lambda_min);
    const double dd = static_cast<double>(d);
    const double b1 = dd / (2.0 * rho);
    const double b2 = dd * dd / (4.0 * rho);
    const auto& ld = levy.log_density;

    const double ln10 = std::log(10.0);
    const double ln_d = std::log(dd);
    auto f1 = [&ld, rho, lambda_min, dd, ln10, ln_d](double t) {
        const double ln_rt = std::log(rho * t);
        return std::exp(ln10 - (rho + lambda_min) * t - ln_rt + dd * (1.0 + ln_rt - ln_d) + ld(t));
    };
    auto f2 = [&ld, rho, lambda_min, dd, ln10](double t) {
        return std::exp(ln10 - t * lambda_min - dd * dd / (5.0 * rho * t) + ld(t));
    };
    auto f3 = [&ld, lambda_min](double t) { return std::exp(-t * lambda_min + ld(t)); };

    const auto i1 = run_quad(f1, 0.0, b1, false, tol, "bernstein_bound_posdef first integral");
    const auto i2 = run_quad(f2, b1, b2, false, tol, "bernstein_bound_posdef second integral");
    const auto i3 = run_quad(f3, b2, 0.0, true, tol, "bernstein_bound_posdef third integral");

    BoundValue out;
    out.kind = BoundKind::quad_posdef;
    out.value = i1.value + i2.value + i3.value;
    out.quad_err = i1.err + i2.err + i3.err;
    out.terms = {{i1.value, i2.value, i3.value}};
    return out;
}

BoundValue frac_bound_closed_semidef(FracPowerSpec spec, double rho_A, int d) {
    if (!(rho_A > 0.0)) domain_fail("frac_bound_closed_semidef requires rho_A > 0");
    if (d < 2) domain_fail("frac_bound_closed_semidef requires d >= 2");
    const double alpha = spec.alpha;
    const double dd = static_cast<double>(d);
    const double pref = alpha / specfun::gamma(1.0 - alpha);

    // first term in log space: e^d / d^d overflows beyond d ~ 140
    const double ln_t1 = std::log(10.0) + dd + alpha * (std::log(rho_A) - std::log(4.0)) -
                         dd * std::log(dd) +
                         specfun::ln_lower_inc_gamma(dd - alpha - 1.0, 0.5 * dd);
    const double t1 = pref * std::exp(ln_t1);

    const double g_hi = specfun::upper_inc_gamma(alpha, 0.8);
    const double g_lo = specfun::upper_inc_gamma(alpha, 2.0 * dd / 5.0);
    const double t2 = pref * 10.0 * std::pow(5.0 * rho_A / (4.0 * dd * dd), alpha) * (g_hi - g_lo);

    const double t3 = pref * std::pow(rho_A, alpha) / (alpha * std::pow(dd, 2.0 * alpha));

    BoundValue out;
    out.kind = BoundKind::closed_frac;
    out.value = t1 + t2 + t3;
    out.terms = {{t1, t2, t3}};
    return out;
}

BoundValue sqrt_bound_closed_semidef(double rho_A, int d) {
    if (!(rho_A > 0.0)) domain_fail("sqrt_bound_closed_semidef requires rho_A > 0");
    if (d < 2) domain_fail("sqrt_bound_closed_semidef requires d >= 2");
    const double dd = static_cast<double>(d);
    const double pref = 1.0 / (2.0 * std::sqrt(kPi));

    const double ln_t1 = std::log(10.0) + dd + 0.5 * (std::log(rho_A) - std::log(4.0)) -
                         dd * std::log(dd) +
                         specfun::ln_lower_inc_gamma(dd - 1.5, 0.5 * dd);
    const double t1 = pref * std::exp(ln_t1);

    const double t2 = pref * 5.0 * std::sqrt(5.0 * kPi * rho_A) / dd *
                      (specfun::erfc(2.0 / std::sqrt(5.0)) - specfun::erfc(std::sqrt(2.0 * dd / 5.0)));
    const double t3 = pref * 2.0 * std::sqrt(rho_A) / dd;

    BoundValue out;
    out.kind = BoundKind::closed_sqrt;
    out.value = t1 + t2 + t3;
    out.terms = {{t1, t2, t3}};
    return out;
}

BoundValue stieltjes_bound(FracPowerSpec spec, double lambda_min, double lambda_max,
                           double inf_norm_A, int d) {
    if (!(lambda_min > 0.0)) {
        domain_fail("stieltjes bound requires lambda_min > 0; "
                    "it does not extend to singular (positive semidefinite) matrices");
    }
    if (!(lambda_max >= lambda_min)) domain_fail("stieltjes bound requires lambda_max >= lambda_min");
    if (!(inf_norm_A >= 0.0)) domain_fail("stieltjes bound requires a nonnegative norm");
    if (d < 2) domain_fail("stieltjes bound requires d >= 2");
    const double kappa = lambda_max / lambda_min;
    const double sk = std::sqrt(kappa);
    const double q = (sk - 1.0) / (sk + 1.0);
    BoundValue out;
    out.kind = BoundKind::stieltjes;
    out.value = 2.0 * std::pow(lambda_min, spec.alpha - 1.0) * inf_norm_A *
                std::pow(q, static_cast<double>(d - 1));
    return out;
}

BoundValue stieltjes_bound_sharp(FracPowerSpec spec, double lambda_min, double lambda_max,
                                 double row_norm_i, double col_norm_j, int d) {
    BoundValue out = stieltjes_bound(spec, lambda_min, lambda_max,
                                     std::min(row_norm_i, col_norm_j), d);
    out.kind = BoundKind::stieltjes_sharp;
    return out;
}

BoundValue jackson_bound(FracPowerSpec spec, double rho_L, int d) {
    if (!(rho_L > 0.0)) domain_fail("jackson_bound requires rho_L > 0");
    if (d < 2) domain_fail("jackson_bound requires d >= 2");
    const double c = 1.0 + kPi * kPi / 2.0;
    BoundValue out;
    out.kind = BoundKind::jackson;
    out.value = c * std::pow(0.5 * rho_L, spec.alpha) *
                std::pow(static_cast<double>(d - 1), -spec.alpha);
    return out;
}

double asymptotic_constant(FracPowerSpec spec, double rho_L) {
    if (!(rho_L > 0.0)) domain_fail("asymptotic_constant requires rho_L > 0");
    const double alpha = spec.alpha;
    const double pref = alpha / specfun::gamma(1.0 - alpha);
    return pref * (10.0 * std::pow(5.0 * rho_L / 4.0, alpha) * specfun::upper_inc_gamma(alpha, 0.8) +
                   std::pow(rho_L, alpha) / alpha);
}

double asymptotic_constant_sqrt(double rho_L) {
    if (!(rho_L > 0.0)) domain_fail("asymptotic_constant_sqrt requires rho_L > 0");
    return 2.5 * std::sqrt(5.0 * rho_L) * specfun::erfc(std::sqrt(0.8)) +
           std::sqrt(rho_L / kPi);
}

double fit_powerlaw_slope(std::span<const std::pair<double, double>> points, int d_min) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long m = 0;
    for (const auto& [d, v] : points) {
        if (d < static_cast<double>(d_min)) continue;
        if (!(v > 0.0)) domain_fail("fit_powerlaw_slope requires positive values");
        const double x = std::log(d);
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 5) domain_fail("fit_powerlaw_slope requires at least 5 points with d >= d_min");
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0) domain_fail("fit_powerlaw_slope: degenerate abscissae");
    return (m * sxy - sx * sy) / denom;
}

} // namespace bounds

} // namespace berndecay
