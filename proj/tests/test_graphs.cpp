#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "berndecay/densefun.hpp"
#include "berndecay/graphs.hpp"
#include "berndecay/matrix_market.hpp"

using namespace berndecay;

namespace {

double row_sum(const SparseSymMatrix& A, int i) {
    double s = 0.0;
    for (int k = A.row_ptr()[i]; k < A.row_ptr()[i + 1]; ++k) s += A.values()[k];
    return s;
}

void check_exact_symmetry(const SparseSymMatrix& A) {
    for (int i = 0; i < A.n(); ++i) {
        for (int k = A.row_ptr()[i]; k < A.row_ptr()[i + 1]; ++k) {
            const int j = A.col_idx()[k];
            CHECK(A.at(j, i) == A.values()[k]); // bit-equal transpose
        }
    }
}

void check_laplacian_invariants(const SparseSymMatrix& A) {
    for (int i = 0; i < A.n(); ++i) {
        CHECK(std::fabs(row_sum(A, i)) <= 1e-12);
    }
    auto eig = densefun::eig_sym(A);
    CHECK(eig.values[0] >= -1e-10);
}

} // namespace

TEST_CASE("chain laplacian") {
    auto A = graphs::chain_laplacian(3);
    const double want[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(A.at(i, j) == want[i][j]);

    for (int n : {2, 5, 37}) {
        auto B = graphs::chain_laplacian(n);
        for (int i = 0; i < n; ++i) CHECK(row_sum(B, i) == 0.0);
        check_exact_symmetry(B);
    }
    CHECK(graphs::spectral_data(graphs::chain_laplacian(100)).gershgorin_radius == 4.0);
    CHECK_THROWS_AS(graphs::chain_laplacian(1), std::invalid_argument);
}

TEST_CASE("cycle laplacian") {
    auto A = graphs::cycle_laplacian(5);
    CHECK(A.at(0, 4) == -1.0); // wrap entry
    CHECK(A.at(4, 0) == -1.0);
    for (int i = 0; i < 5; ++i) CHECK(A.at(i, i) == 2.0);
    check_exact_symmetry(A);

    // spectrum contained in [0, 4] independent of n
    for (int n : {5, 11, 31}) {
        auto eig = densefun::eig_sym(graphs::cycle_laplacian(n));
        CHECK(eig.values[0] >= -1e-12);
        CHECK(eig.values[n - 1] <= 4.0 + 1e-12);
    }

    auto d = graphs::bfs_distances(A, 3);
    CHECK(d.dist[0] == 2); // shortest way around the circle

    CHECK_THROWS_AS(graphs::cycle_laplacian(4), std::invalid_argument);
    CHECK_THROWS_AS(graphs::cycle_laplacian(1), std::invalid_argument);
}

TEST_CASE("grid2d matrix") {
    CHECK(graphs::grid2d_matrix(31, 0.0).n() == 961);

    // explicit Kronecker expansion for N = 2
    auto A = graphs::grid2d_matrix(2, 0.0);
    const double want[4][4] = {
        {4, -1, -1, 0}, {-1, 4, 0, -1}, {-1, 0, 4, -1}, {0, -1, -1, 4}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(A.at(i, j) == want[i][j]);

    // sigma shifts the diagonal by 2 sigma
    auto S0 = graphs::grid2d_matrix(6, 0.0);
    auto S1 = graphs::grid2d_matrix(6, 1.0);
    for (int i = 0; i < S0.n(); ++i) {
        for (int j = 0; j < S0.n(); ++j) {
            CHECK(S1.at(i, j) - S0.at(i, j) == (i == j ? 2.0 : 0.0));
        }
    }
    check_exact_symmetry(S1);

    CHECK(graphs::inf_norm(graphs::grid2d_matrix(31, 0.1)) == doctest::Approx(8.2).epsilon(1e-14));
    CHECK_THROWS_AS(graphs::grid2d_matrix(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(graphs::grid2d_matrix(4, -0.5), std::invalid_argument);
}

TEST_CASE("geometric graph laplacian") {
    // Monte-Carlo degree check: n pi r^2 ~ 17.7 before edge effects
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto L = graphs::geometric_graph_laplacian(1000, 0.075, seed);
        double total_degree = 0.0;
        for (int i = 0; i < L.n(); ++i) total_degree += L.at(i, i);
        const double mean_degree = total_degree / L.n();
        CHECK(mean_degree >= 12.0);
        CHECK(mean_degree <= 24.0);
        for (int i = 0; i < L.n(); ++i) CHECK(std::fabs(row_sum(L, i)) <= 1e-12);
    }

    // radius above sqrt(2): complete graph
    auto C = graphs::geometric_graph_laplacian(30, std::sqrt(2.0) * 1.01, 3);
    for (int i = 0; i < 30; ++i) {
        CHECK(C.at(i, i) == 29.0);
        for (int j = 0; j < 30; ++j) {
            if (i != j) CHECK(C.at(i, j) == -1.0);
        }
    }

    // determinism for a fixed seed
    auto G1 = graphs::geometric_graph_laplacian(200, 0.1, 77);
    auto G2 = graphs::geometric_graph_laplacian(200, 0.1, 77);
    CHECK(G1.values() == G2.values());
    CHECK(G1.col_idx() == G2.col_idx());
}

TEST_CASE("bfs distances") {
    auto chain = graphs::chain_laplacian(5);
    auto d = graphs::bfs_distances(chain, 0);
    CHECK(d.dist == std::vector<int>{0, 1, 2, 3, 4});

    auto cyc = graphs::cycle_laplacian(7);
    auto dc = graphs::bfs_distances(cyc, 0);
    int maxd = 0;
    for (int x : dc.dist) maxd = std::max(maxd, x);
    CHECK(maxd == 3);

    auto grid = graphs::grid2d_matrix(31, 0.0);
    auto dg = graphs::bfs_distances(grid, 15 * 31 + 15); // grid center
    int maxg = 0;
    for (int x : dg.dist) maxg = std::max(maxg, x);
    CHECK(maxg == 30);

    CHECK_THROWS_AS(graphs::bfs_distances(chain, 5), std::out_of_range);
    CHECK_THROWS_AS(graphs::bfs_distances(chain, -1), std::out_of_range);
}

TEST_CASE("bfs distance structure") {
    auto G = graphs::geometric_graph_laplacian(120, 0.15, 21);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(0, G.n() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        const int s = pick(rng), t = pick(rng);
        auto ds = graphs::bfs_distances(G, s);
        CHECK(ds.dist[s] == 0);
        // distance 1 exactly on the off-diagonal pattern
        for (int j = 0; j < G.n(); ++j) {
            if (j == s) continue;
            CHECK((ds.dist[j] == 1) == (G.at(s, j) != 0.0));
        }
        // symmetry of the metric
        auto dt = graphs::bfs_distances(G, t);
        CHECK(ds.dist[t] == dt.dist[s]);
    }
}

TEST_CASE("bfs distances respect the triangle inequality") {
    std::mt19937_64 rng(123);
    auto check_graph = [&rng](const SparseSymMatrix& A) {
        std::uniform_int_distribution<int> pick(0, A.n() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            const int a = pick(rng), b = pick(rng), c = pick(rng);
            auto da = graphs::bfs_distances(A, a);
            auto db = graphs::bfs_distances(A, b);
            if (da.dist[c] < 0 || da.dist[b] < 0 || db.dist[c] < 0) continue;
            CHECK(da.dist[c] <= da.dist[b] + db.dist[c]);
        }
    };
    check_graph(graphs::chain_laplacian(40));
    check_graph(graphs::cycle_laplacian(41));
    check_graph(graphs::grid2d_matrix(8, 0.0));
    check_graph(graphs::geometric_graph_laplacian(150, 0.12, 5));
}

TEST_CASE("generated laplacians are PSD with zero row sums") {
    check_laplacian_invariants(graphs::chain_laplacian(50));
    check_laplacian_invariants(graphs::cycle_laplacian(31));
    check_laplacian_invariants(graphs::geometric_graph_laplacian(200, 0.12, 9));
}

TEST_CASE("spectral data") {
    auto s = graphs::spectral_data(graphs::chain_laplacian(64));
    CHECK(s.gershgorin_radius == 4.0);
    CHECK_FALSE(s.has_eigendata);
    CHECK(std::isnan(s.lambda_min));

    auto grid = graphs::grid2d_matrix(31, 1.0);
    auto sd = densefun::spectral_data(grid, densefun::eig_sym(grid));
    CHECK(sd.has_eigendata);
    CHECK(sd.lambda_min == doctest::Approx(2.019261093311212455).epsilon(1e-12));
    CHECK(sd.lambda_min > 0.0);
    CHECK(sd.gershgorin_radius >= sd.lambda_max);
    CHECK(sd.rho == sd.lambda_max);
    CHECK(sd.kappa == doctest::Approx(sd.lambda_max / sd.lambda_min).epsilon(1e-14));

    // paper-scale geometric instance: spectral radius in a typical window
    auto geo = graphs::geometric_graph_laplacian(1000, 0.075, 1);
    auto sg = densefun::spectral_data(geo, densefun::eig_sym(geo));
    CHECK(sg.rho >= 25.0);
    CHECK(sg.rho <= 40.0);
    CHECK(sg.gershgorin_radius >= sg.lambda_max);
}

TEST_CASE("norms") {
    auto chain = graphs::chain_laplacian(10);
    CHECK(graphs::inf_norm(chain) == 4.0);
    auto [r0, c0] = graphs::row_col_one_norms(chain, 0);
    CHECK(r0 == 2.0);
    CHECK(c0 == 2.0);
    auto [r5, c5] = graphs::row_col_one_norms(chain, 5);
    CHECK(r5 == 4.0);
    CHECK(r5 == c5);
    CHECK_THROWS_AS(graphs::row_col_one_norms(chain, 10), std::out_of_range);
}

TEST_CASE("matrix market round trip") {
    auto A = graphs::grid2d_matrix(5, 0.3);
    std::ostringstream out;
    graphs::write_matrix_market(A, out);
    std::istringstream in(out.str());
    auto B = graphs::read_matrix_market(in);
    CHECK(B.n() == A.n());
    CHECK(B.row_ptr() == A.row_ptr());
    CHECK(B.col_idx() == A.col_idx());
    CHECK(B.values() == A.values()); // bit-exact via 17 significant digits

    CHECK(out.str().rfind("%%MatrixMarket matrix coordinate real symmetric\n", 0) == 0);
}

TEST_CASE("matrix market accepts symmetric general files") {
    const char* text =
        "%%MatrixMarket matrix coordinate real general\n"
        "% a comment\n"
        "2 2 4\n"
        "1 1 2.0\n"
        "1 2 -1.0\n"
        "2 1 -1.0\n"
        "2 2 2.0\n";
    std::istringstream in(text);
    auto A = graphs::read_matrix_market(in);
    CHECK(A.n() == 2);
    CHECK(A.at(0, 1) == -1.0);

    const char* bad =
        "%%MatrixMarket matrix coordinate real general\n"
        "2 2 3\n"
        "1 1 2.0\n"
        "1 2 -1.0\n"
        "2 2 2.0\n";
    std::istringstream bin(bad);
    CHECK_THROWS(graphs::read_matrix_market(bin));
}

TEST_CASE("sparse matrix construction guards") {
    using T = std::vector<std::tuple<int, int, double>>;
    CHECK_THROWS_AS(SparseSymMatrix::from_lower_triplets(0, T{}), std::invalid_argument);
    CHECK_THROWS_AS(SparseSymMatrix::from_lower_triplets(2, T{{0, 1, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseSymMatrix::from_lower_triplets(2, T{{1, 0, 1.0}, {1, 0, 2.0}}),
                    std::invalid_argument);
    // explicit zeros are dropped
    auto A = SparseSymMatrix::from_lower_triplets(2, T{{0, 0, 1.0}, {1, 0, 0.0}, {1, 1, 1.0}});
    CHECK(A.nnz() == 2);
}
