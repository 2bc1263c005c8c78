#pragma once

// Dense ground-truth oracle: full symmetric eigendecomposition, assembly of
// f(A) = V f(Lambda) V^T, fractional powers and the matrix exponential, plus
// the analytic closed forms for entries of the square root of the cycle
// Laplacian.

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "berndecay/graphs.hpp"

namespace berndecay {

/// Full spectral factorization A = V diag(values) V^T, values ascending.
struct EigenDecomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

namespace densefun {

inline constexpr int kDefaultDenseLimit = 3000;

/// Densify and factorize.  Throws if n exceeds dense_limit or the solver
/// fails to converge.
EigenDecomposition eig_sym(const SparseSymMatrix& A, int dense_limit = kDefaultDenseLimit);

/// f(A) = V f(Lambda) V^T for a scalar f defined at every eigenvalue.
/// The result is symmetrized to remove roundoff asymmetry.
Eigen::MatrixXd apply_function(const EigenDecomposition& eig,
                               const std::function<double(double)>& f);

/// A^alpha, alpha in (0,1), with f(0) = 0 as the continuous extension at
/// the origin: eigenvalues within roundoff of zero are treated as zero so
/// that singular Laplacians do not pick up spurious pow(eps, alpha) mass.
Eigen::MatrixXd fractional_power(const EigenDecomposition& eig, double alpha);

/// exp(-t A)
Eigen::MatrixXd matrix_exp_neg(const EigenDecomposition& eig, double t);

/// Exact spectral summary from a full decomposition.
SpectralData spectral_data(const SparseSymMatrix& A, const EigenDecomposition& eig);

/// Analytic entry [sqrt(L)]_{ij} of the cycle Laplacian on n nodes
/// (n odd), 0-based indices:
///   (1/n) (cot(pi (2(i-j)+1) / (2n)) + cot(pi (1-2(i-j)) / (2n))).
double cycle_sqrt_entry(int n, int i, int j);

/// For each odd n: (n, n^2 * |[sqrt(L)]_{mid,0}|) with mid = ceil(n/2)-1.
/// The scaled magnitudes converge to pi as n grows.
std::vector<std::pair<int, double>> cycle_sqrt_midpoint_scaling(const std::vector<int>& ns);

} // namespace densefun

} // namespace berndecay
