#include "berndecay/densefun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace berndecay::densefun {

namespace {

Eigen::MatrixXd densify(const SparseSymMatrix& A) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(A.n(), A.n());
    const auto& rp = A.row_ptr();
    const auto& ci = A.col_idx();
    const auto& vals = A.values();
    for (int i = 0; i < A.n(); ++i) {
        for (int k = rp[i]; k < rp[i + 1]; ++k) {
            M(i, ci[k]) = vals[k];
        }
    }
    return M;
}

} // namespace

EigenDecomposition eig_sym(const SparseSymMatrix& A, int dense_limit) {
    if (A.n() > dense_limit) {
        throw std::invalid_argument("eig_sym: dimension exceeds the dense oracle limit");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(densify(A));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig_sym: eigendecomposition did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXd apply_function(const EigenDecomposition& eig,
                               const std::function<double(double)>& f) {
    const auto n = eig.values.size();
    Eigen::VectorXd fv(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double y = f(eig.values[k]);
        if (!std::isfinite(y)) {
            throw std::domain_error("apply_function: f undefined at an eigenvalue");
        }
        fv[k] = y;
    }
    Eigen::MatrixXd M = eig.vectors * fv.asDiagonal() * eig.vectors.transpose();
    return 0.5 * (M + M.transpose());
}

Eigen::MatrixXd fractional_power(const EigenDecomposition& eig, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("fractional_power: alpha must be in (0,1)");
    }
    const double scale = eig.values.size() > 0 ? eig.values.cwiseAbs().maxCoeff() : 0.0;
    // eigenvalues indistinguishable from 0 at solver accuracy are exact zeros
    const double clamp = 100.0 * std::numeric_limits<double>::epsilon() *
                         static_cast<double>(eig.values.size()) * scale;
    return apply_function(eig, [alpha, clamp](double z) {
        if (z <= clamp) {
            if (z < -clamp) {
                throw std::domain_error("fractional_power: negative eigenvalue");
            }
            return 0.0;
        }
        return std::pow(z, alpha);
    });
}

Eigen::MatrixXd matrix_exp_neg(const EigenDecomposition& eig, double t) {
    return apply_function(eig, [t](double z) { return std::exp(-t * z); });
}

SpectralData spectral_data(const SparseSymMatrix& A, const EigenDecomposition& eig) {
    SpectralData s = graphs::spectral_data(A);
    s.lambda_min = eig.values[0];
    s.lambda_max = eig.values[eig.values.size() - 1];
    s.rho = std::max(std::fabs(s.lambda_min), std::fabs(s.lambda_max));
    s.kappa = s.lambda_min > 0.0 ? s.lambda_max / s.lambda_min
                                 : std::numeric_limits<double>::infinity();
    s.has_eigendata = true;
    return s;
}

double cycle_sqrt_entry(int n, int i, int j) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("cycle_sqrt_entry: n must be odd and >= 3");
    }
    if (i < 0 || i >= n || j < 0 || j >= n) {
        throw std::out_of_range("cycle_sqrt_entry: index out of range");
    }
    const double pi = 3.14159265358979323846;
    const int k = i - j;
    auto cot = [](double x) { return std::cos(x) / std::sin(x); };
    const double a1 = pi * (2.0 * k + 1.0) / (2.0 * n);
    const double a2 = pi * (1.0 - 2.0 * k) / (2.0 * n);
    return (cot(a1) + cot(a2)) / n;
}

std::vector<std::pair<int, double>> cycle_sqrt_midpoint_scaling(const std::vector<int>& ns) {
    std::vector<std::pair<int, double>> out;
    out.reserve(ns.size());
    for (int n : ns) {
        if (n < 5 || n % 2 == 0) {
            throw std::invalid_argument("cycle_sqrt_midpoint_scaling: n must be odd and >= 5");
        }
        const int mid = (n + 1) / 2 - 1; // 0-based ceil(n/2)
        const double e = cycle_sqrt_entry(n, mid, 0);
        out.emplace_back(n, static_cast<double>(n) * static_cast<double>(n) * std::fabs(e));
    }
    return out;
}

} // namespace berndecay::densefun
