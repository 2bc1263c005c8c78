#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "berndecay/bounds.hpp"
#include "berndecay/densefun.hpp"
#include "berndecay/graphs.hpp"
#include "berndecay/specfun.hpp"

using namespace berndecay;

namespace {

double rel_diff(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b)); }

LevyTriple affine_levy(double a, double b) {
    LevyTriple levy;
    levy.a = a;
    levy.b = b;
    levy.density = [](double) { return 0.0; };
    levy.log_density = [](double) { return -std::numeric_limits<double>::infinity(); };
    levy.label = "affine";
    return levy;
}

} // namespace

TEST_CASE("fractional-power levy triple") {
    auto levy = bounds::levy_frac_power(FracPowerSpec(0.5));
    CHECK(levy.a == 0.0);
    CHECK(levy.b == 0.0);
    CHECK(levy.density(1.0) == doctest::Approx(0.28209479177387814347).epsilon(1e-13));
    CHECK(std::exp(levy.log_density(1.0)) ==
          doctest::Approx(levy.density(1.0)).epsilon(1e-13));

    // reconstruct z^alpha from the integral representation
    auto levy3 = bounds::levy_frac_power(FracPowerSpec(0.3));
    CHECK(rel_diff(bounds::bernstein_eval(levy3, 2.0), std::pow(2.0, 0.3)) <= 1e-6);

    // min(t,1)-integrability for a range of alpha
    for (double a : {0.1, 0.5, 0.9}) {
        const double v = bounds::validate_levy_triple(bounds::levy_frac_power(FracPowerSpec(a)));
        CHECK(std::isfinite(v));
        CHECK(v > 0.0);
    }

    CHECK_THROWS_AS(FracPowerSpec(0.0), std::domain_error);
    CHECK_THROWS_AS(FracPowerSpec(1.0), std::domain_error);
    CHECK_THROWS_AS(bounds::validate_levy_triple(affine_levy(-1.0, 0.0)), std::domain_error);
}

TEST_CASE("exponential entry bound, semidefinite") {
    // regime (ii): 10 e^{-1} (e/4)^4
    auto b1 = bounds::exp_entry_bound_semidef(1.0, 1.0, 4);
    REQUIRE(b1.has_value());
    CHECK(*b1 == doctest::Approx(0.78459128606201827113).epsilon(1e-12));

    // regime (i): rho t = 4 >= 1, sqrt(16) = 4 <= 6 <= 8
    auto b2 = bounds::exp_entry_bound_semidef(1.0, 4.0, 6);
    REQUIRE(b2.has_value());
    CHECK(*b2 == doctest::Approx(10.0 * std::exp(-36.0 / 20.0)).epsilon(1e-13));

    // outside both regimes
    CHECK_FALSE(bounds::exp_entry_bound_semidef(1.0, 10.0, 3).has_value());

    // regime boundary d = 2 rho t resolves to regime (ii)
    auto tie = bounds::exp_entry_bound_semidef(1.0, 2.0, 4);
    REQUIRE(tie.has_value());
    CHECK(*tie == doctest::Approx(10.0 * std::exp(-2.0) / 2.0 * std::pow(std::exp(1.0) * 2.0 / 4.0, 4))
                      .epsilon(1e-12));

    CHECK_THROWS_AS(bounds::exp_entry_bound_semidef(0.0, 1.0, 2), std::domain_error);
    CHECK_THROWS_AS(bounds::exp_entry_bound_semidef(1.0, -1.0, 2), std::domain_error);
    CHECK_THROWS_AS(bounds::exp_entry_bound_semidef(1.0, 1.0, 0), std::domain_error);
}

TEST_CASE("exponential entry bound, positive definite") {
    // lambda_min -> 0 recovers the semidefinite bound with rho = lambda_max/4
    for (double t : {0.3, 1.0, 3.0}) {
        for (int d = 1; d <= 12; ++d) {
            auto pd = bounds::exp_entry_bound_posdef(1e-12, 4.0, t, d);
            auto sd = bounds::exp_entry_bound_semidef(1.0, t, d);
            CHECK(pd.has_value() == sd.has_value());
            if (pd && sd && *sd > 0.0) CHECK(rel_diff(*pd, *sd) <= 1e-9);
        }
    }

    // rho = (5-1)/4 = 1, regime (ii): 10 e^{-2} (e/4)^4
    auto b = bounds::exp_entry_bound_posdef(1.0, 5.0, 1.0, 4);
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(0.2886350038644785245).epsilon(1e-12));

    // the shift only helps: posdef <= semidef with rho(A) = lambda_max
    for (double lmin : {0.2, 1.0, 2.0}) {
        for (double lmax : {4.0, 8.0}) {
            for (double t : {0.5, 1.0, 2.0, 4.0}) {
                for (int d = 2; d <= 14; ++d) {
                    auto pd = bounds::exp_entry_bound_posdef(lmin, lmax, t, d);
                    auto sd = bounds::exp_entry_bound_semidef(lmax / 4.0, t, d);
                    if (pd && sd) CHECK(*pd <= *sd * (1.0 + 1e-12));
                }
            }
        }
    }

    CHECK_THROWS_AS(bounds::exp_entry_bound_posdef(0.0, 4.0, 1.0, 2), std::domain_error);
    CHECK_THROWS_AS(bounds::exp_entry_bound_posdef(5.0, 4.0, 1.0, 2), std::domain_error);
}

TEST_CASE("quadrature bound agrees with the closed form") {
    auto levy = bounds::levy_frac_power(FracPowerSpec(0.5));
    for (int d = 2; d <= 50; ++d) {
        auto q = bounds::bernstein_bound_semidef(levy, 4.0, d);
        auto c = bounds::frac_bound_closed_semidef(FracPowerSpec(0.5), 4.0, d);
        CHECK(rel_diff(q.value, c.value) <= 1e-6);
        REQUIRE(q.quad_err.has_value());
        REQUIRE(q.terms.has_value());
    }
}

TEST_CASE("quadrature bound for an affine Bernstein function is zero") {
    auto q = bounds::bernstein_bound_semidef(affine_levy(0.7, 3.0), 2.0, 5);
    CHECK(q.value == 0.0);
    auto q2 = bounds::bernstein_bound_semidef(affine_levy(0.7, 3.0), 2.0, 2);
    CHECK(q2.value == 0.0);
}

TEST_CASE("quadrature failure names the failing integral") {
    LevyTriple bad; // density too singular at the origin to be a Levy measure
    bad.density = [](double t) { return std::pow(t, -2.5); };
    bad.log_density = [](double t) { return -2.5 * std::log(t); };
    bad.label = "bad";
    try {
        bounds::bernstein_bound_semidef(bad, 4.0, 2);
        FAIL("expected QuadratureError");
    } catch (const quad::QuadratureError& e) {
        CHECK(std::string(e.what()).find("first integral") != std::string::npos);
    }
}

TEST_CASE("quadrature bound error estimate") {
    auto levy = bounds::levy_frac_power(FracPowerSpec(0.25));
    auto q = bounds::bernstein_bound_semidef(levy, 31.64, 10);
    CHECK(q.value > 0.0);
    CHECK(std::isfinite(q.value));
    REQUIRE(q.quad_err.has_value());
    CHECK(*q.quad_err < 1e-8 * q.value);
    // self-consistency at two tolerances
    auto tight = bounds::bernstein_bound_semidef(levy, 31.64, 10, {1e-11, 1e-16});
    CHECK(rel_diff(q.value, tight.value) <= 1e-8);
}

TEST_CASE("closed fractional bound values") {
    // 50-digit references computed independently from the same formulas
    auto b1 = bounds::frac_bound_closed_semidef(FracPowerSpec(0.5), 4.0, 10);
    CHECK(b1.value == doctest::Approx(0.34622035923185132543).epsilon(1e-12));
    auto b2 = bounds::frac_bound_closed_semidef(FracPowerSpec(0.25), 4.0, 2);
    CHECK(b2.value == doctest::Approx(4.2333951626460734184).epsilon(1e-12));
    auto b3 = bounds::frac_bound_closed_semidef(FracPowerSpec(0.75), 31.64, 7);
    CHECK(b3.value == doctest::Approx(0.93800147993118358334).epsilon(1e-12));
    auto b4 = bounds::frac_bound_closed_semidef(FracPowerSpec(0.5), 1.0, 50);
    CHECK(b4.value == doctest::Approx(0.034304499955001946431).epsilon(1e-12));
    REQUIRE(b1.terms.has_value());
    CHECK(b1.value == (*b1.terms)[0] + (*b1.terms)[1] + (*b1.terms)[2]);

    // finite in log space far beyond the overflow point of e^d/d^d
    auto big = bounds::frac_bound_closed_semidef(FracPowerSpec(0.5), 4.0, 10000);
    CHECK(std::isfinite(big.value));
    CHECK(big.value > 0.0);

    CHECK_THROWS_AS(bounds::frac_bound_closed_semidef(FracPowerSpec(0.5), 4.0, 1),
                    std::domain_error);
    CHECK_THROWS_AS(bounds::frac_bound_closed_semidef(FracPowerSpec(0.5), 0.0, 4),
                    std::domain_error);
}

TEST_CASE("sqrt bound is the alpha = 1/2 specialization") {
    auto s = bounds::sqrt_bound_closed_semidef(4.0, 4);
    CHECK(s.value == doctest::Approx(1.0121535633715580374).epsilon(1e-12));
    for (int d = 2; d <= 100; ++d) {
        auto a = bounds::sqrt_bound_closed_semidef(4.0, d);
        auto b = bounds::frac_bound_closed_semidef(FracPowerSpec(0.5), 4.0, d);
        CHECK(rel_diff(a.value, b.value) <= 1e-12);
    }
}

TEST_CASE("sqrt bound with an enlarged spectral radius still dominates") {
    // any rho >= rho(A) keeps the bound valid; 31.64 is well above the grid's 7.98
    auto A = graphs::grid2d_matrix(31, 0.0);
    auto eig = densefun::eig_sym(A);
    Eigen::MatrixXd root = densefun::fractional_power(eig, 0.5);
    double max_d2 = 0.0;
    for (int i = 0; i < A.n(); ++i) {
        auto dist = graphs::bfs_distances(A, i);
        for (int j = i + 1; j < A.n(); ++j) {
            if (dist.dist[j] == 2) max_d2 = std::max(max_d2, std::fabs(root(i, j)));
        }
    }
    auto b = bounds::sqrt_bound_closed_semidef(31.64, 2);
    CHECK(b.value > 0.0);
    CHECK(std::isfinite(b.value));
    CHECK(b.value >= max_d2);
}

TEST_CASE("sqrt bound dominant terms decay like 1/d") {
    std::vector<std::pair<double, double>> pts;
    for (int d = 4; d <= 1000; ++d) {
        auto b = bounds::sqrt_bound_closed_semidef(4.0, d);
        pts.emplace_back(static_cast<double>(d), (*b.terms)[1] + (*b.terms)[2]);
    }
    const double slope = bounds::fit_powerlaw_slope(pts, 4);
    CHECK(std::fabs(slope - (-1.0)) <= 0.02);
}

TEST_CASE("closed bound tail constant approaches the asymptotic constant") {
    // d * (term2 + term3) -> C for alpha = 1/2
    auto b = bounds::frac_bound_closed_semidef(FracPowerSpec(0.5), 4.0, 100000);
    const double tail = 1e5 * ((*b.terms)[1] + (*b.terms)[2]);
    CHECK(std::fabs(tail - 3.43) <= 0.01);
    // general alpha: d^{2 alpha} (term2+term3) vs the constant, 1e-3 relative
    for (double alpha : {0.25, 0.5, 0.75}) {
        auto bb = bounds::frac_bound_closed_semidef(FracPowerSpec(alpha), 4.0, 100000);
        const double c = std::pow(1e5, 2.0 * alpha) * ((*bb.terms)[1] + (*bb.terms)[2]);
        CHECK(rel_diff(c, bounds::asymptotic_constant(FracPowerSpec(alpha), 4.0)) <= 1e-3);
    }
}

TEST_CASE("positive definite quadrature bound") {
    auto levy = bounds::levy_frac_power(FracPowerSpec(0.5));

    // continuity towards the semidefinite bound as lambda_min -> 0
    for (int d : {2, 5, 12}) {
        auto pd = bounds::bernstein_bound_posdef(levy, 1e-12, 4.0, d);
        auto sd = bounds::bernstein_bound_semidef(levy, 4.0, d);
        CHECK(rel_diff(pd.value, sd.value) <= 1e-4);
    }

    // tail integral against the incomplete-gamma closed form
    {
        const double lmin = 2.0, lmax = 10.0;
        const int d = 8;
        const double rho = 0.25 * (lmax - lmin);
        auto pd = bounds::bernstein_bound_posdef(levy, lmin, lmax, d);
        REQUIRE(pd.terms.has_value());
        const double alpha = 0.5;
        const double pref = alpha / specfun::gamma(1.0 - alpha);
        const double want = pref * std::pow(lmin, alpha) *
                            specfun::upper_inc_gamma(-alpha, lmin * d * d / (4.0 * rho));
        CHECK(rel_diff((*pd.terms)[2], want) <= 1e-8);
    }

    // shift can only decrease the bound relative to semidefinite at lambda_max
    for (double lmin : {0.05, 0.5, 2.0}) {
        for (double lmax : {4.0, 10.0}) {
            for (int d : {2, 4, 8, 16, 32}) {
                auto pd = bounds::bernstein_bound_posdef(levy, lmin, lmax, d);
                auto sd = bounds::bernstein_bound_semidef(levy, lmax, d);
                CHECK(pd.value <= sd.value * (1.0 + 1e-9));
            }
        }
    }

    CHECK_THROWS_AS(bounds::bernstein_bound_posdef(levy, 0.0, 4.0, 4), std::domain_error);
    CHECK_THROWS_AS(bounds::bernstein_bound_posdef(levy, 4.0, 4.0, 4), std::domain_error);
}

TEST_CASE("stieltjes bound") {
    FracPowerSpec half(0.5);
    // kappa = 1 gives q = 0 and a zero bound
    CHECK(bounds::stieltjes_bound(half, 2.0, 2.0, 4.0, 3).value == 0.0);

    // linear in the norm
    auto a = bounds::stieltjes_bound(half, 1.0, 5.0, 4.0, 4);
    auto b = bounds::stieltjes_bound(half, 1.0, 5.0, 8.0, 4);
    CHECK(b.value == doctest::Approx(2.0 * a.value).epsilon(1e-14));

    // singular matrices are rejected with the reason spelled out
    try {
        bounds::stieltjes_bound(half, 0.0, 4.0, 4.0, 3);
        FAIL("expected a domain error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("lambda_min > 0") != std::string::npos);
    }
}

TEST_CASE("sharpened stieltjes bound") {
    FracPowerSpec half(0.5);
    // equal row/column norms reproduce the basic bound
    auto basic = bounds::stieltjes_bound(half, 1.0, 5.0, 4.0, 6);
    auto sharp = bounds::stieltjes_bound_sharp(half, 1.0, 5.0, 4.0, 4.0, 6);
    CHECK(sharp.value == basic.value);

    // chain endpoint norm is half the interior norm
    auto endpoint = bounds::stieltjes_bound_sharp(half, 1.0, 5.0, 2.0, 4.0, 6);
    CHECK(endpoint.value == doctest::Approx(0.5 * basic.value).epsilon(1e-14));

    // never exceeds the basic bound
    for (int d : {2, 3, 8}) {
        auto s = bounds::stieltjes_bound_sharp(half, 0.7, 6.0, 3.0, 5.0, d);
        auto g = bounds::stieltjes_bound(half, 0.7, 6.0, 5.0, d);
        CHECK(s.value <= g.value);
    }
}

TEST_CASE("jackson bound") {
    FracPowerSpec half(0.5);
    CHECK(bounds::jackson_bound(half, 4.0, 2).value ==
          doctest::Approx(8.393077762011974583).epsilon(1e-13));
    CHECK(bounds::jackson_bound(FracPowerSpec(0.25), 4.0, 2).value ==
          doctest::Approx(7.0577090030215385029).epsilon(1e-13));
    // (d-1)^{-alpha} = 1 and rho/2 = 1
    CHECK(bounds::jackson_bound(half, 2.0, 2).value ==
          doctest::Approx(5.9348022005446793094).epsilon(1e-13));
    CHECK_THROWS_AS(bounds::jackson_bound(half, -1.0, 4), std::domain_error);
}

TEST_CASE("asymptotic constants") {
    CHECK(std::fabs(bounds::asymptotic_constant(FracPowerSpec(0.5), 4.0) - 3.43) <= 0.01);
    CHECK(std::fabs(bounds::asymptotic_constant(FracPowerSpec(0.25), 4.0) - 2.18) <= 0.01);
    CHECK(rel_diff(bounds::asymptotic_constant_sqrt(4.0),
                   bounds::asymptotic_constant(FracPowerSpec(0.5), 4.0)) <= 1e-12);
}

TEST_CASE("power-law slope fitting") {
    std::vector<std::pair<double, double>> exact;
    for (int d = 3; d <= 40; ++d) exact.emplace_back(d, 7.0 * std::pow(d, -1.5));
    CHECK(std::fabs(bounds::fit_powerlaw_slope(exact, 3) - (-1.5)) <= 1e-12);

    std::vector<std::pair<double, double>> few = {{10, 1}, {20, 2}, {30, 3}};
    CHECK_THROWS_AS(bounds::fit_powerlaw_slope(few, 2), std::domain_error);
    std::vector<std::pair<double, double>> bad;
    for (int d = 2; d <= 10; ++d) bad.emplace_back(d, d == 5 ? -1.0 : 1.0);
    CHECK_THROWS_AS(bounds::fit_powerlaw_slope(bad, 2), std::domain_error);
}

TEST_CASE("analytic cycle entries decay with slope -2") {
    const int n = 4001;
    std::vector<std::pair<double, double>> pts;
    for (int j = 1; j < n; ++j) {
        const int around = j;
        const int d = std::min(around, n - around);
        if (d < 50 || d > 500) continue;
        pts.emplace_back(static_cast<double>(d),
                         std::fabs(densefun::cycle_sqrt_entry(n, j, 0)));
    }
    const double slope = bounds::fit_powerlaw_slope(pts, 50);
    CHECK(std::fabs(slope - (-2.0)) <= 0.1);
}

TEST_CASE("new bound decays faster than the Jackson bound") {
    FracPowerSpec half(0.5);
    double prev = std::numeric_limits<double>::infinity();
    for (int d : {10, 100, 1000, 10000}) {
        const double ratio = bounds::frac_bound_closed_semidef(half, 4.0, d).value /
                             bounds::jackson_bound(half, 4.0, d).value;
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("bound evaluators are deterministic") {
    auto a = bounds::frac_bound_closed_semidef(FracPowerSpec(0.37), 5.5, 9);
    auto b = bounds::frac_bound_closed_semidef(FracPowerSpec(0.37), 5.5, 9);
    CHECK(a.value == b.value);
    auto levy = bounds::levy_frac_power(FracPowerSpec(0.37));
    auto q1 = bounds::bernstein_bound_semidef(levy, 5.5, 9);
    auto q2 = bounds::bernstein_bound_semidef(levy, 5.5, 9);
    CHECK(q1.value == q2.value);
    CHECK(*q1.quad_err == *q2.quad_err);
}

TEST_CASE("domination on a fixed geometric instance") {
    auto L = graphs::geometric_graph_laplacian(300, 0.15, 42);
    auto eig = densefun::eig_sym(L);
    const double rho = eig.values[eig.values.size() - 1];
    for (double alpha : {0.25, 0.75}) {
        Eigen::MatrixXd M = densefun::fractional_power(eig, alpha);
        auto dist = graphs::bfs_distances(L, 0);
        std::vector<double> max_entry(64, 0.0);
        int dmax = 0;
        for (int j = 1; j < L.n(); ++j) {
            const int d = dist.dist[j];
            if (d < 2) continue;
            max_entry[static_cast<std::size_t>(d)] =
                std::max(max_entry[static_cast<std::size_t>(d)], std::fabs(M(0, j)));
            dmax = std::max(dmax, d);
        }
        for (int d = 2; d <= dmax; ++d) {
            if (max_entry[static_cast<std::size_t>(d)] == 0.0) continue;
            CHECK(bounds::frac_bound_closed_semidef(FracPowerSpec(alpha), rho, d).value >=
                  max_entry[static_cast<std::size_t>(d)]);
            CHECK(bounds::jackson_bound(FracPowerSpec(alpha), rho, d).value >=
                  max_entry[static_cast<std::size_t>(d)]);
        }
    }
}
