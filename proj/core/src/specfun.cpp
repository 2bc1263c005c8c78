#include "berndecay/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace berndecay::specfun {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

[[noreturn]] void domain_fail(const std::string& what) {
    throw std::domain_error("specfun: " + what);
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Series for the regularized lower incomplete gamma in log space:
// ln gamma(s,x) = s ln x - x + ln sum_{n>=0} x^n / (s (s+1) ... (s+n)).
// Converges for x < s + 1.
double ln_lower_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    double ap = s;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) {
            return s * std::log(x) - x + std::log(sum);
        }
    }
    domain_fail("lower incomplete gamma series failed to converge");
}

// Continued fraction (modified Lentz) for the upper incomplete gamma:
// returns ln Gamma(s,x) = -x + s ln x + ln h.  Converges for x > s + 1
// and also for s < 0 with x > 0.
double ln_upper_cf(double s, double x) {
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) {
            return -x + s * std::log(x) + std::log(h);
        }
    }
    domain_fail("upper incomplete gamma continued fraction failed to converge");
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) domain_fail("ln_gamma requires x > 0");
    return std::lgamma(x);
}

double gamma(double x) {
    if (is_nonpositive_integer(x)) domain_fail("gamma pole at non-positive integer");
    return std::tgamma(x);
}

double upper_inc_gamma(double s, double x) {
    if (!(x > 0.0)) domain_fail("upper_inc_gamma requires x > 0");
    if (s == 0.0 || s <= -1.0) domain_fail("upper_inc_gamma requires s in (-1,0) or s > 0");
    if (s < 0.0) {
        // Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x}) / s, s in (-1,0)
        double g1 = upper_inc_gamma(s + 1.0, x);
        double p = std::exp(s * std::log(x) - x);
        return (g1 - p) / s;
    }
    if (x < s + 1.0) {
        // complement of the series: Gamma(s,x) = Gamma(s) (1 - P(s,x))
        double lnp = ln_lower_series(s, x) - std::lgamma(s);
        return std::exp(std::lgamma(s)) * -std::expm1(lnp);
    }
    return std::exp(ln_upper_cf(s, x));
}

double lower_inc_gamma(double s, double x) {
    if (!(s > 0.0)) domain_fail("lower_inc_gamma requires s > 0");
    if (!(x >= 0.0)) domain_fail("lower_inc_gamma requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x < s + 1.0) {
        return std::exp(ln_lower_series(s, x));
    }
    // gamma(s,x) = Gamma(s) (1 - Q(s,x))
    double lnq = ln_upper_cf(s, x) - std::lgamma(s);
    return std::exp(std::lgamma(s)) * -std::expm1(lnq);
}

double ln_lower_inc_gamma(double s, double x) {
    if (!(s > 0.0)) domain_fail("ln_lower_inc_gamma requires s > 0");
    if (!(x > 0.0)) domain_fail("ln_lower_inc_gamma requires x > 0");
    if (x < s + 1.0) {
        return ln_lower_series(s, x);
    }
    double lnq = ln_upper_cf(s, x) - std::lgamma(s);
    return std::lgamma(s) + std::log1p(-std::exp(lnq));
}

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

} // namespace berndecay::specfun
