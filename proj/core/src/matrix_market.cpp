#include "berndecay/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace berndecay::graphs {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("matrix market: " + what);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

SparseSymMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) parse_fail("empty input");
    std::istringstream banner(line);
    std::string head, object, format, field, symmetry;
    banner >> head >> object >> format >> field >> symmetry;
    if (head != "%%MatrixMarket") parse_fail("missing %%MatrixMarket banner");
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (object != "matrix" || format != "coordinate") {
        parse_fail("only 'matrix coordinate' files are supported");
    }
    if (field != "real" && field != "integer") {
        parse_fail("only real-valued files are supported");
    }
    const bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general") {
        parse_fail("unsupported symmetry kind '" + symmetry + "'");
    }

    // skip comments
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '%') break;
    }
    std::istringstream sizes(line);
    long rows = 0, cols = 0, nnz = 0;
    if (!(sizes >> rows >> cols >> nnz)) parse_fail("bad size line");
    if (rows != cols) parse_fail("matrix is not square");
    if (rows < 1) parse_fail("bad dimension");

    std::vector<std::tuple<int, int, double>> lower_entries;
    std::map<std::pair<int, int>, double> upper_seen; // for 'general' symmetry check
    lower_entries.reserve(static_cast<std::size_t>(nnz));
    for (long k = 0; k < nnz; ++k) {
        long i = 0, j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v)) parse_fail("truncated entry list");
        if (i < 1 || i > rows || j < 1 || j > cols) parse_fail("index out of range");
        const int i0 = static_cast<int>(i - 1);
        const int j0 = static_cast<int>(j - 1);
        if (symmetric) {
            if (i0 < j0) parse_fail("symmetric file stores an upper-triangle entry");
            lower_entries.emplace_back(i0, j0, v);
        } else {
            if (i0 >= j0) {
                lower_entries.emplace_back(i0, j0, v);
            }
            if (i0 != j0) {
                // remember both orientations to verify a_ij == a_ji exactly
                if (i0 < j0) {
                    upper_seen[{j0, i0}] = v;
                }
            }
        }
    }
    if (!symmetric) {
        std::map<std::pair<int, int>, double> lower_offdiag;
        for (const auto& [i, j, v] : lower_entries) {
            if (i != j) lower_offdiag[{i, j}] = v;
        }
        if (lower_offdiag.size() != upper_seen.size()) {
            parse_fail("general file is not structurally symmetric");
        }
        for (const auto& [key, v] : lower_offdiag) {
            auto it = upper_seen.find(key);
            if (it == upper_seen.end() || it->second != v) {
                parse_fail("general file is not numerically symmetric");
            }
        }
    }
    return SparseSymMatrix::from_lower_triplets(static_cast<int>(rows), lower_entries);
}

SparseSymMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open '" + path + "'");
    return read_matrix_market(in);
}

void write_matrix_market(const SparseSymMatrix& A, std::ostream& out) {
    const auto& rp = A.row_ptr();
    const auto& ci = A.col_idx();
    const auto& vals = A.values();
    long nnz_lower = 0;
    for (int i = 0; i < A.n(); ++i) {
        for (int k = rp[i]; k < rp[i + 1]; ++k) {
            if (ci[k] <= i) ++nnz_lower;
        }
    }
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << A.n() << " " << A.n() << " " << nnz_lower << "\n";
    char buf[64];
    for (int i = 0; i < A.n(); ++i) {
        for (int k = rp[i]; k < rp[i + 1]; ++k) {
            if (ci[k] > i) continue;
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i + 1, ci[k] + 1, vals[k]);
            out << buf;
        }
    }
}

void write_matrix_market_file(const SparseSymMatrix& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) parse_fail("cannot open '" + path + "' for writing");
    write_matrix_market(A, out);
}

} // namespace berndecay::graphs
