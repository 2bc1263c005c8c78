// Command-line surface: generate test matrices, compute decay reports for a
// column of A^alpha, check bound domination, print the asymptotic constants,
// emit the analytic cycle column and fit power-law slopes.
//
// User-facing node indices are 1-based, matching the Matrix Market files.
// Exit codes: 0 success, 1 domination violation, 2 usage or domain errors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berndecay/bounds.hpp"
#include "berndecay/densefun.hpp"
#include "berndecay/graphs.hpp"
#include "berndecay/matrix_market.hpp"
#include "berndecay/report.hpp"

namespace {

using namespace berndecay;

FracPowerSpec parse_func(const std::string& func) {
    if (func.rfind("frac:", 0) != 0) {
        throw std::invalid_argument("function descriptor must be frac:ALPHA, got '" + func + "'");
    }
    return FracPowerSpec(std::stod(func.substr(5)));
}

std::set<BoundKind> parse_bound_list(const std::string& list) {
    std::set<BoundKind> kinds;
    std::istringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) kinds.insert(bound_kind_from_string(token));
    }
    if (kinds.empty()) throw std::invalid_argument("empty bound kind list");
    return kinds;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

int cmd_gen(const std::string& kind, int n, double sigma, double radius,
            std::uint64_t seed, const std::string& out) {
    SparseSymMatrix A = [&] {
        if (kind == "chain") return graphs::chain_laplacian(n);
        if (kind == "cycle") return graphs::cycle_laplacian(n);
        if (kind == "grid2d") return graphs::grid2d_matrix(n, sigma);
        if (kind == "geometric") return graphs::geometric_graph_laplacian(n, radius, seed);
        throw std::invalid_argument("unknown matrix kind '" + kind + "'");
    }();
    graphs::write_matrix_market_file(A, out);
    std::cerr << "wrote " << A.n() << "x" << A.n() << " matrix (" << A.nnz()
              << " stored entries) to " << out << "\n";
    return 0;
}

report::DecayReport build_report(const std::string& matrix_path, int source1,
                                 const std::string& func, const std::string& bound_list,
                                 double tol, bool cap_trivial, bool no_entries) {
    SparseSymMatrix A = graphs::read_matrix_market_file(matrix_path);
    if (source1 < 1 || source1 > A.n()) {
        throw std::invalid_argument("source node out of range (1.." + std::to_string(A.n()) + ")");
    }
    report::ReportOptions opts;
    if (tol > 0.0) opts.tol.rel_tol = tol;
    opts.cap_trivial = cap_trivial;
    opts.with_entries = !no_entries;
    opts.matrix_desc = matrix_path;
    return report::compute_decay_report(A, source1 - 1, parse_func(func),
                                        parse_bound_list(bound_list), opts);
}

int cmd_report(const std::string& matrix_path, int source1, const std::string& func,
               const std::string& bound_list, const std::string& format, double tol,
               bool cap_trivial, bool no_entries, const std::string& out) {
    auto rep = build_report(matrix_path, source1, func, bound_list, tol, cap_trivial, no_entries);
    const std::string text = format == "json" ? report::emit_json(rep) : report::emit_csv(rep);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
        std::cerr << "wrote " << rep.records.size() << " records to " << out << "\n";
    }
    return 0;
}

int cmd_check(const std::string& matrix_path, int source1, const std::string& func,
              const std::string& bound_list, double tol) {
    auto rep = build_report(matrix_path, source1, func, bound_list, tol, false, false);
    auto summary = report::check_domination(rep);
    std::cout << "checked " << summary.checked << " (pair, bound) combinations, "
              << summary.violations.size() << " violations\n";
    if (summary.checked > 0 && summary.violations.empty()) {
        std::cout << "bound/entry ratio range: [" << summary.min_ratio << ", "
                  << summary.max_ratio << "]\n";
    }
    for (const auto& v : summary.violations) {
        std::cerr << "violation: j=" << (v.j + 1) << " kind=" << to_string(v.kind)
                  << " bound=" << v.bound << " entry=" << v.entry << "\n";
    }
    return summary.violations.empty() ? 0 : 1;
}

int cmd_constants(double alpha, double rho) {
    FracPowerSpec spec(alpha);
    std::printf("asymptotic %.2f\n", bounds::asymptotic_constant(spec, rho));
    std::printf("jackson %.2f\n",
                bounds::jackson_bound(spec, rho, 2).value); // (d-1)^-alpha = 1 at d = 2
    return 0;
}

int cmd_cycle_exact(int n, int source1, const std::string& out) {
    if (source1 < 1 || source1 > n) throw std::invalid_argument("source node out of range");
    const int i = source1 - 1;
    std::ostringstream os;
    os << "j,distance,entry,abs_entry\n";
    char buf[96];
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const int around = std::abs(i - j);
        const int d = std::min(around, n - around);
        const double e = densefun::cycle_sqrt_entry(n, i, j);
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", j + 1, d, e, std::fabs(e));
        os << buf;
    }
    if (out.empty()) {
        std::cout << os.str();
    } else {
        write_text_file(out, os.str());
    }
    return 0;
}

int cmd_slope(const std::string& in_path, const std::string& column, int dmin) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + in_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto table = report::parse_csv(buffer.str());
    const int dcol = table.column("distance");
    const int vcol = table.column(column);
    if (dcol < 0) throw std::invalid_argument("CSV has no 'distance' column");
    if (vcol < 0) throw std::invalid_argument("CSV has no '" + column + "' column");
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : table.rows) {
        const std::string& ds = row[static_cast<std::size_t>(dcol)];
        const std::string& vs = row[static_cast<std::size_t>(vcol)];
        if (ds == "inf" || ds.empty() || vs.empty()) continue;
        pts.emplace_back(std::stod(ds), std::stod(vs));
    }
    const double slope = bounds::fit_powerlaw_slope(pts, dmin);
    std::printf("%.12g\n", slope);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decay bounds for Bernstein functions of sparse symmetric matrices"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a test matrix (Matrix Market)");
    std::string gen_kind, gen_out;
    int gen_n = 0;
    double gen_sigma = 0.0, gen_radius = 0.075;
    std::uint64_t gen_seed = 42;
    gen->add_option("--kind", gen_kind, "chain|cycle|grid2d|geometric")->required();
    gen->add_option("--n", gen_n, "node count (grid2d: side length N, matrix is N^2)")->required();
    gen->add_option("--sigma", gen_sigma, "diagonal shift for grid2d (default 0)");
    gen->add_option("--radius", gen_radius, "connection radius for geometric (default 0.075)");
    gen->add_option("--seed", gen_seed, "RNG seed for geometric (default 42)");
    gen->add_option("--out", gen_out, "output file")->required();

    // report
    auto* rpt = app.add_subcommand("report", "decay report for one column of A^alpha");
    std::string rpt_matrix, rpt_func, rpt_bounds, rpt_format = "csv", rpt_out;
    int rpt_source = 0;
    double rpt_tol = 0.0;
    bool rpt_cap = false, rpt_noentries = false;
    rpt->add_option("--matrix", rpt_matrix, "Matrix Market file")->required();
    rpt->add_option("--source", rpt_source, "source node (1-based)")->required();
    rpt->add_option("--func", rpt_func, "function descriptor frac:ALPHA")->required();
    rpt->add_option("--bounds", rpt_bounds,
                    "comma list: closedfrac,closedsqrt,quadsemidef,quadposdef,"
                    "stieltjes,stieltjessharp,jackson")
        ->required();
    rpt->add_option("--format", rpt_format, "csv|json (default csv)");
    rpt->add_option("--tol", rpt_tol, "relative quadrature tolerance override");
    rpt->add_flag("--cap-trivial", rpt_cap, "add the trivial cap f(lambda_max) column");
    rpt->add_flag("--no-entries", rpt_noentries, "skip the dense oracle (bound columns only)");
    rpt->add_option("--out", rpt_out, "output file (default stdout)");

    // check
    auto* chk = app.add_subcommand("check", "verify bound >= |entry| for a column");
    std::string chk_matrix, chk_func, chk_bounds;
    int chk_source = 0;
    double chk_tol = 0.0;
    chk->add_option("--matrix", chk_matrix)->required();
    chk->add_option("--source", chk_source)->required();
    chk->add_option("--func", chk_func)->required();
    chk->add_option("--bounds", chk_bounds)->required();
    chk->add_option("--tol", chk_tol, "relative quadrature tolerance override");

    // constants
    auto* cst = app.add_subcommand("constants", "asymptotic and Jackson constants");
    double cst_alpha = 0.5, cst_rho = 4.0;
    cst->add_option("--alpha", cst_alpha)->required();
    cst->add_option("--rho", cst_rho)->required();

    // cycle-exact
    auto* cyc = app.add_subcommand("cycle-exact", "analytic sqrt(L) column of the cycle graph");
    int cyc_n = 0, cyc_source = 1;
    std::string cyc_out;
    cyc->add_option("--n", cyc_n, "cycle length (odd)")->required();
    cyc->add_option("--source", cyc_source, "source node (1-based)")->required();
    cyc->add_option("--out", cyc_out, "output file (default stdout)");

    // slope
    auto* slp = app.add_subcommand("slope", "log-log power-law slope of a CSV column");
    std::string slp_in, slp_column;
    int slp_dmin = 2;
    slp->add_option("--in", slp_in, "input CSV")->required();
    slp->add_option("--column", slp_column, "value column name")->required();
    slp->add_option("--dmin", slp_dmin, "smallest distance included");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_sigma, gen_radius, gen_seed, gen_out);
        if (rpt->parsed())
            return cmd_report(rpt_matrix, rpt_source, rpt_func, rpt_bounds, rpt_format, rpt_tol,
                              rpt_cap, rpt_noentries, rpt_out);
        if (chk->parsed()) return cmd_check(chk_matrix, chk_source, chk_func, chk_bounds, chk_tol);
        if (cst->parsed()) return cmd_constants(cst_alpha, cst_rho);
        if (cyc->parsed()) return cmd_cycle_exact(cyc_n, cyc_source, cyc_out);
        if (slp->parsed()) return cmd_slope(slp_in, slp_column, slp_dmin);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
