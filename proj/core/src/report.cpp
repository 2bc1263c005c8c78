#include "berndecay/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace berndecay::report {

namespace {

const std::set<BoundKind> kReportableKinds = {
    BoundKind::closed_frac,    BoundKind::closed_sqrt, BoundKind::quad_semidef,
    BoundKind::quad_posdef,    BoundKind::stieltjes,   BoundKind::stieltjes_sharp,
    BoundKind::jackson,
};

bool needs_posdef(BoundKind k) {
    return k == BoundKind::quad_posdef || k == BoundKind::stieltjes ||
           k == BoundKind::stieltjes_sharp;
}

bool depends_only_on_distance(BoundKind k) {
    return k != BoundKind::stieltjes_sharp;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

DecayReport compute_decay_report(const SparseSymMatrix& A, int source, FracPowerSpec alpha,
                                 const std::set<BoundKind>& kinds, ReportOptions opts) {
    if (source < 0 || source >= A.n()) {
        throw std::out_of_range("compute_decay_report: source out of range");
    }
    for (BoundKind k : kinds) {
        if (!kReportableKinds.count(k)) {
            throw std::invalid_argument("compute_decay_report: bound kind '" + to_string(k) +
                                        "' is not a report column");
        }
    }
    if (kinds.count(BoundKind::closed_sqrt) && alpha.alpha != 0.5) {
        throw std::invalid_argument("closedsqrt applies to alpha = 1/2 only");
    }

    const bool want_posdef = std::any_of(kinds.begin(), kinds.end(), needs_posdef);
    const bool need_eig = opts.with_entries || want_posdef;

    DecayReport rep;
    rep.matrix_desc = opts.matrix_desc;
    rep.source = source;
    rep.func_desc = "frac:" + [&] {
        std::ostringstream os;
        os << alpha.alpha;
        return os.str();
    }();
    rep.kinds.assign(kinds.begin(), kinds.end());

    std::optional<EigenDecomposition> eig;
    if (need_eig) {
        eig = densefun::eig_sym(A, opts.dense_limit);
        rep.spectral = densefun::spectral_data(A, *eig);
        const double psd_tol = 100.0 * std::numeric_limits<double>::epsilon() * A.n() *
                               std::max(std::fabs(rep.spectral.lambda_max), 1.0);
        if (rep.spectral.lambda_min < -psd_tol) {
            throw std::invalid_argument("compute_decay_report: matrix is not positive semidefinite");
        }
        // an eigenvalue at roundoff scale is a zero eigenvalue
        if (rep.spectral.lambda_min <= psd_tol) {
            rep.spectral.lambda_min = 0.0;
            rep.spectral.kappa = std::numeric_limits<double>::infinity();
        }
    } else {
        rep.spectral = graphs::spectral_data(A);
    }

    if (want_posdef && !(rep.spectral.lambda_min > 0.0)) {
        throw std::invalid_argument(
            "bound kinds quadposdef/stieltjes/stieltjessharp require lambda_min > 0; "
            "matrix is singular (positive semidefinite only)");
    }

    // spectral radius for the semidefinite bounds: exact lambda_max when the
    // decomposition is available, Gershgorin upper bound otherwise (the
    // bounds stay valid for any rho >= rho(A))
    const double rho_A = rep.spectral.has_eigendata ? rep.spectral.lambda_max
                                                    : rep.spectral.gershgorin_radius;

    std::optional<Eigen::MatrixXd> fA;
    if (opts.with_entries) {
        fA = densefun::fractional_power(*eig, alpha.alpha);
    }

    const DistanceVector dv = graphs::bfs_distances(A, source);
    const int max_d = *std::max_element(dv.dist.begin(), dv.dist.end());

    // cache the distance-only bounds per distinct distance
    std::map<BoundKind, std::vector<std::optional<BoundValue>>> cache;
    for (BoundKind k : kinds) {
        if (depends_only_on_distance(k)) {
            cache[k].assign(static_cast<std::size_t>(std::max(max_d, 1)) + 1, std::nullopt);
        }
    }
    auto eval_distance_bound = [&](BoundKind k, int d) -> BoundValue {
        auto& slot = cache[k][static_cast<std::size_t>(d)];
        if (!slot) {
            switch (k) {
                case BoundKind::closed_frac:
                    slot = bounds::frac_bound_closed_semidef(alpha, rho_A, d);
                    break;
                case BoundKind::closed_sqrt:
                    slot = bounds::sqrt_bound_closed_semidef(rho_A, d);
                    break;
                case BoundKind::quad_semidef:
                    slot = bounds::bernstein_bound_semidef(bounds::levy_frac_power(alpha), rho_A,
                                                           d, opts.tol);
                    break;
                case BoundKind::quad_posdef:
                    slot = bounds::bernstein_bound_posdef(bounds::levy_frac_power(alpha),
                                                          rep.spectral.lambda_min,
                                                          rep.spectral.lambda_max, d, opts.tol);
                    break;
                case BoundKind::stieltjes:
                    slot = bounds::stieltjes_bound(alpha, rep.spectral.lambda_min,
                                                   rep.spectral.lambda_max,
                                                   graphs::inf_norm(A), d);
                    break;
                case BoundKind::jackson:
                    slot = bounds::jackson_bound(alpha, rho_A, d);
                    break;
                default:
                    throw std::logic_error("unexpected distance-only bound kind");
            }
        }
        return *slot;
    };

    const double source_row_norm = graphs::row_col_one_norms(A, source).first;
    const double cap_value = std::pow(rho_A, alpha.alpha);

    rep.records.reserve(static_cast<std::size_t>(A.n()) - 1);
    for (int j = 0; j < A.n(); ++j) {
        if (j == source) continue;
        DecayRecord rec;
        rec.j = j;
        rec.distance = dv.dist[j];
        if (fA) rec.abs_entry = std::fabs((*fA)(source, j));
        if (opts.cap_trivial) rec.cap = cap_value;

        if (rec.distance == DistanceVector::kUnreachable) {
            // disconnected pair: every bound is zero (entries of f(A) vanish
            // across components); no domination flags
            for (BoundKind k : kinds) {
                BoundValue z;
                z.kind = k;
                z.value = 0.0;
                rec.bounds[k] = z;
            }
        } else if (rec.distance >= 2) {
            for (BoundKind k : kinds) {
                BoundValue bv;
                if (k == BoundKind::stieltjes_sharp) {
                    const double rn_j = graphs::row_col_one_norms(A, j).first;
                    bv = bounds::stieltjes_bound_sharp(alpha, rep.spectral.lambda_min,
                                                       rep.spectral.lambda_max, source_row_norm,
                                                       rn_j, rec.distance);
                } else {
                    bv = eval_distance_bound(k, rec.distance);
                }
                rec.bounds[k] = bv;
                if (rec.abs_entry) {
                    rec.dominated[k] = bv.value >= *rec.abs_entry;
                }
            }
        }
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

DominationSummary check_domination(const DecayReport& report) {
    DominationSummary s;
    double max_ratio = -std::numeric_limits<double>::infinity();
    double min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& rec : report.records) {
        if (rec.distance < 2 || !rec.abs_entry) continue;
        for (const auto& [kind, bv] : rec.bounds) {
            ++s.checked;
            if (bv.value < *rec.abs_entry) {
                s.violations.push_back({rec.j, kind, bv.value, *rec.abs_entry});
            }
            if (*rec.abs_entry > 0.0) {
                const double r = bv.value / *rec.abs_entry;
                max_ratio = std::max(max_ratio, r);
                min_ratio = std::min(min_ratio, r);
            }
        }
    }
    if (s.checked > 0 && std::isfinite(max_ratio)) {
        s.max_ratio = max_ratio;
        s.min_ratio = min_ratio;
    }
    return s;
}

std::string emit_csv(const DecayReport& report) {
    std::ostringstream os;
    os << "j,distance,abs_entry";
    for (BoundKind k : report.kinds) os << "," << to_string(k);
    bool any_cap = false;
    for (const auto& rec : report.records) any_cap |= rec.cap.has_value();
    if (any_cap) os << "," << to_string(BoundKind::trivial_cap);
    os << "\n";
    for (const auto& rec : report.records) {
        os << (rec.j + 1) << ",";
        if (rec.distance == DistanceVector::kUnreachable) {
            os << "inf";
        } else {
            os << rec.distance;
        }
        os << ",";
        if (rec.abs_entry) os << fmt_double(*rec.abs_entry);
        for (BoundKind k : report.kinds) {
            os << ",";
            auto it = rec.bounds.find(k);
            if (it != rec.bounds.end()) os << fmt_double(it->second.value);
        }
        if (any_cap) {
            os << ",";
            if (rec.cap) os << fmt_double(*rec.cap);
        }
        os << "\n";
    }
    return os.str();
}

std::string emit_json(const DecayReport& report) {
    nlohmann::json j;
    j["tool"] = report.tool;
    j["version"] = report.version;
    j["matrix"] = report.matrix_desc;
    j["source"] = report.source + 1;
    j["func"] = report.func_desc;
    nlohmann::json spec;
    spec["gershgorin_radius"] = report.spectral.gershgorin_radius;
    spec["has_eigendata"] = report.spectral.has_eigendata;
    if (report.spectral.has_eigendata) {
        spec["lambda_min"] = report.spectral.lambda_min;
        spec["lambda_max"] = report.spectral.lambda_max;
        spec["rho"] = report.spectral.rho;
        if (std::isfinite(report.spectral.kappa)) {
            spec["kappa"] = report.spectral.kappa;
        } else {
            spec["kappa"] = "inf";
        }
    }
    j["spectral"] = spec;
    nlohmann::json kinds = nlohmann::json::array();
    for (BoundKind k : report.kinds) kinds.push_back(to_string(k));
    j["kinds"] = kinds;

    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : report.records) {
        nlohmann::json r;
        r["j"] = rec.j + 1;
        if (rec.distance == DistanceVector::kUnreachable) {
            r["distance"] = "inf";
        } else {
            r["distance"] = rec.distance;
        }
        if (rec.abs_entry) r["abs_entry"] = *rec.abs_entry;
        nlohmann::json bs;
        for (const auto& [kind, bv] : rec.bounds) {
            nlohmann::json b;
            b["value"] = bv.value;
            if (bv.quad_err) b["quad_err"] = *bv.quad_err;
            bs[to_string(kind)] = b;
        }
        r["bounds"] = bs;
        if (!rec.dominated.empty()) {
            nlohmann::json dom;
            for (const auto& [kind, ok] : rec.dominated) dom[to_string(kind)] = ok;
            r["dominated"] = dom;
        }
        if (rec.cap) r["trivial_cap"] = *rec.cap;
        records.push_back(std::move(r));
    }
    j["records"] = records;
    return j.dump(2) + "\n";
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        if (first) {
            t.header = std::move(fields);
            first = false;
        } else {
            t.rows.push_back(std::move(fields));
        }
    }
    return t;
}

} // namespace berndecay::report
