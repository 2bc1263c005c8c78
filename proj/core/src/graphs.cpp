#include "berndecay/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>

namespace berndecay {

SparseSymMatrix SparseSymMatrix::from_lower_triplets(
    int n, const std::vector<std::tuple<int, int, double>>& entries) {
    if (n < 1) throw std::invalid_argument("SparseSymMatrix: n must be >= 1");
    std::vector<std::tuple<int, int, double>> full;
    full.reserve(2 * entries.size());
    for (const auto& [i, j, v] : entries) {
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw std::invalid_argument("SparseSymMatrix: index out of range");
        }
        if (i < j) {
            throw std::invalid_argument("SparseSymMatrix: expected lower-triangle entries (i >= j)");
        }
        if (v == 0.0) continue;
        full.emplace_back(i, j, v);
        if (i != j) full.emplace_back(j, i, v);
    }
    std::sort(full.begin(), full.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (std::size_t k = 1; k < full.size(); ++k) {
        if (std::get<0>(full[k]) == std::get<0>(full[k - 1]) &&
            std::get<1>(full[k]) == std::get<1>(full[k - 1])) {
            throw std::invalid_argument("SparseSymMatrix: duplicate entry");
        }
    }
    SparseSymMatrix A;
    A.n_ = n;
    A.row_ptr_.assign(n + 1, 0);
    A.col_idx_.reserve(full.size());
    A.values_.reserve(full.size());
    for (const auto& [i, j, v] : full) {
        ++A.row_ptr_[i + 1];
        A.col_idx_.push_back(j);
        A.values_.push_back(v);
    }
    for (int i = 0; i < n; ++i) A.row_ptr_[i + 1] += A.row_ptr_[i];
    return A;
}

double SparseSymMatrix::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
        throw std::out_of_range("SparseSymMatrix::at: index out of range");
    }
    const auto begin = col_idx_.begin() + row_ptr_[i];
    const auto end = col_idx_.begin() + row_ptr_[i + 1];
    const auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j) return 0.0;
    return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

namespace graphs {

SparseSymMatrix chain_laplacian(int n) {
    if (n < 2) throw std::invalid_argument("chain_laplacian: n must be >= 2");
    std::vector<std::tuple<int, int, double>> t;
    t.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        t.emplace_back(i, i, (i == 0 || i == n - 1) ? 1.0 : 2.0);
        if (i > 0) t.emplace_back(i, i - 1, -1.0);
    }
    return SparseSymMatrix::from_lower_triplets(n, t);
}

SparseSymMatrix cycle_laplacian(int n) {
    if (n < 3) throw std::invalid_argument("cycle_laplacian: n must be >= 3");
    if (n % 2 == 0) throw std::invalid_argument("cycle_laplacian: n must be odd");
    std::vector<std::tuple<int, int, double>> t;
    t.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        t.emplace_back(i, i, 2.0);
        if (i > 0) t.emplace_back(i, i - 1, -1.0);
    }
    t.emplace_back(n - 1, 0, -1.0);
    return SparseSymMatrix::from_lower_triplets(n, t);
}

SparseSymMatrix grid2d_matrix(int N, double sigma) {
    if (N < 2) throw std::invalid_argument("grid2d_matrix: N must be >= 2");
    if (sigma < 0.0) throw std::invalid_argument("grid2d_matrix: sigma must be >= 0");
    const int n = N * N;
    auto idx = [N](int r, int c) { return r * N + c; };
    std::vector<std::tuple<int, int, double>> t;
    t.reserve(3 * static_cast<std::size_t>(n));
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) {
            const int k = idx(r, c);
            t.emplace_back(k, k, 4.0 + 2.0 * sigma);
            if (c > 0) t.emplace_back(k, idx(r, c - 1), -1.0);
            if (r > 0) t.emplace_back(k, idx(r - 1, c), -1.0);
        }
    }
    return SparseSymMatrix::from_lower_triplets(n, t);
}

SparseSymMatrix geometric_graph_laplacian(int n, double radius, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("geometric_graph_laplacian: n must be >= 1");
    if (!(radius > 0.0)) throw std::invalid_argument("geometric_graph_laplacian: radius must be > 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = unif(rng);
        y[i] = unif(rng);
    }
    const double r2 = radius * radius;
    std::vector<int> degree(n, 0);
    std::vector<std::tuple<int, int, double>> t;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx * dx + dy * dy < r2) {
                t.emplace_back(i, j, -1.0);
                ++degree[i];
                ++degree[j];
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (degree[i] > 0) t.emplace_back(i, i, static_cast<double>(degree[i]));
    }
    return SparseSymMatrix::from_lower_triplets(n, t);
}

DistanceVector bfs_distances(const SparseSymMatrix& A, int source) {
    const int n = A.n();
    if (source < 0 || source >= n) {
        throw std::out_of_range("bfs_distances: source out of range");
    }
    DistanceVector d;
    d.source = source;
    d.dist.assign(n, DistanceVector::kUnreachable);
    d.dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    const auto& rp = A.row_ptr();
    const auto& ci = A.col_idx();
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int k = rp[u]; k < rp[u + 1]; ++k) {
            const int v = ci[k];
            if (v == u) continue; // diagonal is not an edge
            if (d.dist[v] == DistanceVector::kUnreachable) {
                d.dist[v] = d.dist[u] + 1;
                q.push(v);
            }
        }
    }
    return d;
}

SpectralData spectral_data(const SparseSymMatrix& A) {
    SpectralData s;
    s.gershgorin_radius = inf_norm(A);
    s.lambda_min = std::numeric_limits<double>::quiet_NaN();
    s.lambda_max = std::numeric_limits<double>::quiet_NaN();
    s.rho = std::numeric_limits<double>::quiet_NaN();
    s.kappa = std::numeric_limits<double>::quiet_NaN();
    s.has_eigendata = false;
    return s;
}

double inf_norm(const SparseSymMatrix& A) {
    double best = 0.0;
    const auto& rp = A.row_ptr();
    const auto& vals = A.values();
    for (int i = 0; i < A.n(); ++i) {
        double row = 0.0;
        for (int k = rp[i]; k < rp[i + 1]; ++k) row += std::fabs(vals[k]);
        best = std::max(best, row);
    }
    return best;
}

std::pair<double, double> row_col_one_norms(const SparseSymMatrix& A, int i) {
    if (i < 0 || i >= A.n()) {
        throw std::out_of_range("row_col_one_norms: index out of range");
    }
    double row = 0.0;
    const auto& rp = A.row_ptr();
    const auto& vals = A.values();
    for (int k = rp[i]; k < rp[i + 1]; ++k) row += std::fabs(vals[k]);
    return {row, row}; // symmetric storage: column i equals row i
}

} // namespace graphs

} // namespace berndecay
