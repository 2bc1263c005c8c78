#pragma once

// Decay reports: per-node distance, oracle entry magnitude, requested decay
// bounds and domination flags for one column of A^alpha, plus CSV/JSON
// serialization and the domination checker.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "berndecay/bounds.hpp"
#include "berndecay/densefun.hpp"
#include "berndecay/graphs.hpp"

namespace berndecay::report {

inline constexpr const char* kToolName = "berndecay";
inline constexpr const char* kToolVersion = "0.1.0";

struct DecayRecord {
    int j = 0;                                   // 0-based node index
    int distance = DistanceVector::kUnreachable; // kUnreachable = infinity
    std::optional<double> abs_entry;
    std::map<BoundKind, BoundValue> bounds;
    std::map<BoundKind, bool> dominated; // only for 2 <= distance < infinity
    std::optional<double> cap;           // trivial cap f(lambda_max)
};

struct DecayReport {
    std::string matrix_desc;
    int source = 0; // 0-based
    std::string func_desc;
    SpectralData spectral;
    std::vector<BoundKind> kinds; // requested bound kinds, canonical order
    std::vector<DecayRecord> records;
    std::string tool = kToolName;
    std::string version = kToolVersion;
};

struct ReportOptions {
    bounds::QuadTolerances tol{};
    bool cap_trivial = false;
    bool with_entries = true;
    int dense_limit = densefun::kDefaultDenseLimit;
    std::string matrix_desc;
};

/// Assemble the decay report for one source column of A^alpha.  Bounds are
/// evaluated once per distinct distance where they only depend on d(i,j);
/// the sharpened Stieltjes bound is evaluated per pair.  Bound kinds that
/// need lambda_min > 0 reject singular matrices with an explicit message.
DecayReport compute_decay_report(const SparseSymMatrix& A, int source, FracPowerSpec alpha,
                                 const std::set<BoundKind>& kinds, ReportOptions opts = {});

struct DominationSummary {
    struct Violation {
        int j;
        BoundKind kind;
        double bound;
        double entry;
    };
    std::vector<Violation> violations;
    long checked = 0;
    double max_ratio = 0.0; // bound/entry extremes over checked pairs
    double min_ratio = 0.0;
};

DominationSummary check_domination(const DecayReport& report);

/// Header `j,distance,abs_entry,<one column per bound kind>`; floats with
/// 17 significant digits, infinite distance as `inf`, absent values empty.
std::string emit_csv(const DecayReport& report);

/// Full report including metadata and quadrature error estimates.
std::string emit_json(const DecayReport& report);

/// Minimal CSV reader for the slope subcommand and round-trip tests.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// column index for a header name, -1 if missing
    int column(const std::string& name) const;
};
CsvTable parse_csv(const std::string& text);

} // namespace berndecay::report
