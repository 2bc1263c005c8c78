#pragma once

// Sparse symmetric matrices, the test-matrix generators, and graph queries
// on the pattern (BFS geodesic distances, Gershgorin radius, norms).
// Node indices are 0-based throughout the C++ API.

#include <cstdint>
#include <utility>
#include <vector>

namespace berndecay {

/// Compressed sparse rows of a real symmetric matrix with both triangles
/// stored and no explicitly stored zeros.  Doubles as the graph G(A):
/// nodes 0..n-1, edges where a_ij != 0, i != j.
class SparseSymMatrix {
public:
    /// Build from (i, j, value) entries of the lower triangle (i >= j);
    /// the upper triangle is mirrored.  Zero values are dropped, duplicate
    /// positions are an error.
    static SparseSymMatrix from_lower_triplets(
        int n, const std::vector<std::tuple<int, int, double>>& entries);

    int n() const { return n_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(values_.size()); }

    const std::vector<int>& row_ptr() const { return row_ptr_; }
    const std::vector<int>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }

    /// Entry lookup, O(log nnz(row)).
    double at(int i, int j) const;

private:
    SparseSymMatrix() = default;
    int n_ = 0;
    std::vector<int> row_ptr_;
    std::vector<int> col_idx_;
    std::vector<double> values_;
};

/// Spectral summary used by the bound evaluators.  lambda_min/lambda_max,
/// rho and kappa are only meaningful when has_eigendata is true (see
/// densefun::spectral_data); the Gershgorin radius is always exact.
struct SpectralData {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double rho = 0.0;            // spectral radius
    double gershgorin_radius = 0.0;
    double kappa = 0.0;          // lambda_max / lambda_min, +inf if singular
    bool has_eigendata = false;
};

/// BFS distances from one source node; kUnreachable marks d(i,j) = infinity.
struct DistanceVector {
    static constexpr int kUnreachable = -1;
    int source = 0;
    std::vector<int> dist;
};

namespace graphs {

/// Laplacian of the 1-D chain with n nodes: tridiagonal, diagonal
/// (1, 2, ..., 2, 1), off-diagonals -1.
SparseSymMatrix chain_laplacian(int n);

/// Laplacian of the n-cycle (n odd): circulant with diagonal 2,
/// off-diagonal and corner entries -1.
SparseSymMatrix cycle_laplacian(int n);

/// A = I (x) M + M (x) I with M = tridiag(-1, 2+sigma, -1) of size N,
/// row-major node numbering; dimension N^2, diagonal 4 + 2*sigma.
SparseSymMatrix grid2d_matrix(int N, double sigma);

/// Laplacian of a random geometric graph: n points uniform in the unit
/// square, edges between pairs closer than radius.  Deterministic for a
/// fixed seed within this implementation.
SparseSymMatrix geometric_graph_laplacian(int n, double radius, std::uint64_t seed);

/// Unweighted shortest-path distances over the pattern of A (diagonal
/// ignored); DistanceVector::kUnreachable where no path exists.
DistanceVector bfs_distances(const SparseSymMatrix& A, int source);

/// Gershgorin-only spectral summary (has_eigendata = false).  The exact
/// eigen-extremes come from densefun::spectral_data.
SpectralData spectral_data(const SparseSymMatrix& A);

/// max_i sum_j |a_ij|
double inf_norm(const SparseSymMatrix& A);

/// (row i 1-norm, column i 1-norm); equal by symmetry.
std::pair<double, double> row_col_one_norms(const SparseSymMatrix& A, int i);

} // namespace graphs

} // namespace berndecay
