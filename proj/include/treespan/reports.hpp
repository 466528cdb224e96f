#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "treespan/augment.hpp"
#include "treespan/coloring.hpp"
#include "treespan/elimination.hpp"
#include "treespan/graph.hpp"

namespace treespan {

using json = nlohmann::json;

json edges_to_json(const std::vector<Edge>& edges);  // [[u,v], ...]
json to_json(const StructuralReport& r);
json to_json(const BoundReport& r);
json to_json(const VerifyReport& r);  // includes the flattened violation list
json to_json(const EltreeReport& r);
json to_json(const ColProfile& p);
json to_json(const AdmCertificate& c);

/// Canonical serialisation: {n, component_count, f, f_new (with origins),
/// chain_edges, degree_histogram, bound_report}. bound may be null when the
/// caller did not run the bound check; the field is emitted as JSON null.
json augmentation_to_json(const Augmentation& a, const StructuralReport& structure,
                          const BoundReport* bound);

/// Rebuilds an Augmentation from augmentation_to_json output (the degree
/// histogram and bound report are derived data and ignored). Throws
/// std::invalid_argument on missing or ill-typed fields.
Augmentation augmentation_from_json(const json& j);

/// Wall-clock seconds per pipeline phase.
struct PhaseTimes {
    double backbone_s = 0.0;
    double degree3_s = 0.0;
    double total_s = 0.0;
};

/// One row of a pipeline experiment: instance descriptor, ordering kind, the
/// bound ingredients, and phase timings. margin >= 0 whenever adm is exact.
struct ExperimentRecord {
    std::string instance;
    std::uint64_t seed = 0;
    int n = 0;
    long long m = 0;
    std::string ordering_kind;
    int r = 0;
    int col_2r = 0;
    int adm_value = 0;
    bool adm_is_exact = false;
    long long bound = 0;
    long long margin = 0;
    PhaseTimes times;
};

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRecord& rec);
json to_json(const ExperimentRecord& rec);

/// One benchmark size: best/mean/stddev over `reps` repetitions of the
/// backbone + degree-3 construction.
struct BenchRow {
    int n = 0;
    long long m = 0;
    double seconds_best = 0.0;
    double seconds_mean = 0.0;
    double seconds_stddev = 0.0;
    int reps = 0;
};

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace treespan
