#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "treespan/augment.hpp"
#include "treespan/coloring.hpp"
#include "treespan/elimination.hpp"
#include "treespan/generators.hpp"
#include "treespan/graph.hpp"
#include "treespan/ordering.hpp"
#include "treespan/reports.hpp"
#include "treespan/successor.hpp"

namespace {

using namespace treespan;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

// Exact admissibility is budget-guarded: without an explicit --budget it runs
// only on graphs small enough (n <= 12) for the search to be trivially cheap.
constexpr std::uint64_t kDefaultExactBudget = 50'000'000;
constexpr int kDefaultExactLimit = 12;

std::uint64_t effective_budget(std::optional<std::uint64_t> flag, int n) {
    if (flag) return *flag;
    return n <= kDefaultExactLimit ? kDefaultExactBudget : 0;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << content;
}

Graph load_graph_with_warnings(const std::string& path) {
    Graph g = load_graph_file(path);
    if (g.had_duplicate_edges())
        std::cerr << "warning: duplicate edges collapsed in " << path << "\n";
    if (g.had_self_loops())
        std::cerr << "warning: self-loops dropped in " << path << "\n";
    return g;
}

// --ordering {file:PATH|degeneracy|natural|random:SEED}
Ordering make_ordering(const std::string& source, const Graph& g) {
    if (source == "degeneracy") return degeneracy_ordering(g);
    if (source == "natural") return Ordering::natural(g.n());
    if (source.rfind("file:", 0) == 0) return load_ordering_file(source.substr(5), g.n());
    if (source.rfind("random:", 0) == 0) {
        const std::string seed_text = source.substr(7);
        try {
            return Ordering::random(g.n(), std::stoull(seed_text));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad random ordering seed: " + seed_text);
        }
    }
    throw std::invalid_argument("unknown ordering source: " + source +
                                " (expected file:PATH, degeneracy, natural, or random:SEED)");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- commands

struct GenConfig {
    std::string family;
    std::vector<long long> params;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_gen(const GenConfig& cfg) {
    const GeneratorSpec spec{cfg.family, cfg.params, cfg.seed};
    write_output(cfg.out, write_edge_list(generate(spec)));
    return kExitOk;
}

struct PipelineConfig {
    std::string graph_path;
    std::string ordering = "degeneracy";
    int r = 1;
    std::optional<std::uint64_t> budget;
    std::string out;
    std::string augmentation_path;  // verify only
    std::string format = "json";
};

int cmd_augment(const PipelineConfig& cfg) {
    const Graph g = load_graph_with_warnings(cfg.graph_path);
    const Ordering l = make_ordering(cfg.ordering, g);
    const Augmentation a = augment(g, l);
    const VerifyReport vr = verify_augmentation(g, l, a, cfg.r, effective_budget(cfg.budget, g.n()));
    const json report = augmentation_to_json(a, vr.structure, &vr.bound);

    if (cfg.out.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        // --out holds the T edge list; the JSON report lands beside it.
        write_output(cfg.out, write_edge_list(a.tree()));
        write_output(cfg.out + ".json", report.dump(2) + "\n");
    }
    return vr.structure.ok() ? kExitOk : kExitVerification;
}

// Elimination-tree checks run per connected component under the restriction
// of L to the component's members.
json check_eltrees(const Graph& g, const Ordering& l, std::vector<std::string>& violations) {
    json out = json::array();
    for (const auto& comp : connected_components(g)) {
        std::vector<int> members = comp;
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return l.less(a, b); });
        const InducedSubgraph sub = induced_subgraph(g, members);
        std::vector<int> position(sub.old_id.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            const auto at = std::lower_bound(sub.old_id.begin(), sub.old_id.end(), members[i]);
            position[i] = static_cast<int>(at - sub.old_id.begin());
        }
        const Ordering l_sub = Ordering::from_positions(position);
        const EliminationTree s = elimination_tree(sub.graph, l_sub);
        const EltreeReport er = check_eltree_properties(sub.graph, l_sub, s);
        json entry = to_json(er);
        entry["component_min"] = comp.front();
        out.push_back(entry);
        for (const auto& v : er.violations)
            violations.push_back("eltree component " + std::to_string(comp.front()) + ": " + v);
    }
    return out;
}

int cmd_verify(const PipelineConfig& cfg) {
    const Graph g = load_graph_with_warnings(cfg.graph_path);
    const Ordering l = make_ordering(cfg.ordering, g);

    Augmentation a;
    if (cfg.augmentation_path.empty()) {
        a = augment(g, l);
    } else {
        std::ifstream in(cfg.augmentation_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open augmentation file: " + cfg.augmentation_path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("augmentation JSON: ") + e.what());
        }
        a = augmentation_from_json(j);
    }

    const VerifyReport vr = verify_augmentation(g, l, a, cfg.r, effective_budget(cfg.budget, g.n()));
    std::vector<std::string> violations = vr.violations();

    json eltree = check_eltrees(g, l, violations);

    json successor = json{{"checked", false}};
    if (vr.structure.spanning_tree && vr.structure.max_degree_ok) {
        const Graph t = a.tree();
        const Walk w = tree_to_kwalk(t);
        const SuccessorRelation s = walk_to_successor(w);
        const bool perm_ok = verify_successor(s, g.n());
        const bool support_ok = successor_supported(t, w, s);
        int max_visits = 0;
        for (int v = 0; v < t.n(); ++v) max_visits = std::max(max_visits, w.visit_count(v));
        successor = json{{"checked", true},
                         {"is_permutation", perm_ok},
                         {"supported", support_ok},
                         {"max_visits", max_visits}};
        if (!perm_ok) violations.push_back("successor relation is not a permutation");
        if (!support_ok) violations.push_back("successor relation is not walk-supported");
        if (max_visits > 3) violations.push_back("walk visits a vertex more than 3 times");
    } else {
        violations.push_back("successor law skipped: T is not a degree-3 spanning tree");
    }

    const bool ok = violations.empty();
    const json report{{"augmentation", to_json(vr)},
                      {"eltree", eltree},
                      {"successor", successor},
                      {"ok", ok},
                      {"violations", violations}};
    write_output(cfg.out, report.dump(2) + "\n");
    return ok ? kExitOk : kExitVerification;
}

int cmd_succ(const PipelineConfig& cfg) {
    const Graph g = load_graph_with_warnings(cfg.graph_path);
    const Ordering l = make_ordering(cfg.ordering, g);
    const Augmentation a = augment(g, l);
    const Graph t = a.tree();
    const Walk w = tree_to_kwalk(t);
    const SuccessorRelation s = walk_to_successor(w);
    if (!verify_successor(s, g.n()) || !successor_supported(t, w, s)) {
        std::cerr << "successor verification failed on the constructed walk\n";
        return kExitVerification;
    }
    write_output(cfg.out, successor_to_text(s));
    return kExitOk;
}

struct BenchConfig {
    std::string family = "grid";
    std::string sizes = "500x500,1000x1000";
    int reps = 5;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_bench(const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    std::istringstream size_list(cfg.sizes);
    std::string token;
    while (std::getline(size_list, token, ',')) {
        Graph g;
        if (cfg.family == "grid") {
            const auto x = token.find('x');
            if (x == std::string::npos)
                throw std::invalid_argument("grid size must look like 500x500: " + token);
            g = make_grid(std::stoi(token.substr(0, x)), std::stoi(token.substr(x + 1)));
        } else if (cfg.family == "random_gnm") {
            const int n = std::stoi(token);
            g = make_random_gnm(n, 2LL * n, cfg.seed);
        } else {
            throw std::invalid_argument("bench family must be grid or random_gnm");
        }
        const Ordering l = Ordering::natural(g.n());  // time the pipeline, not the ordering
        std::vector<double> times;
        for (int rep = 0; rep < cfg.reps; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const Augmentation a = augment(g, l);
            times.push_back(seconds_since(start));
            if (static_cast<long long>(a.f.size()) != g.n() - 1)
                throw std::logic_error("bench: pipeline produced a non-spanning tree");
        }
        BenchRow row;
        row.n = g.n();
        row.m = g.m();
        row.reps = cfg.reps;
        row.seconds_best = *std::min_element(times.begin(), times.end());
        double sum = 0;
        for (double t : times) sum += t;
        row.seconds_mean = sum / cfg.reps;
        double var = 0;
        for (double t : times) var += (t - row.seconds_mean) * (t - row.seconds_mean);
        row.seconds_stddev = std::sqrt(var / cfg.reps);
        rows.push_back(row);
    }
    write_output(cfg.out, bench_csv(rows));
    return kExitOk;
}

struct SuiteConfig {
    int count = 100;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> budget;
    std::string out;
    std::string format = "csv";
};

// Randomised end-to-end batch on small graphs: augment, verify the bound and
// the elimination/successor properties, and report one record per (instance,
// r) pair.
int cmd_suite(const SuiteConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<ExperimentRecord> records;
    json failures = json::array();
    bool all_ok = true;

    for (int i = 0; i < cfg.count; ++i) {
        const int n = 4 + static_cast<int>(uniform_below(rng, 9));  // 4..12
        const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        const long long m = 1 + static_cast<long long>(uniform_below(
                                    rng, static_cast<std::uint64_t>(std::min<long long>(2 * n, max_m))));
        const std::uint64_t graph_seed = rng();
        const Graph g = make_random_gnm(n, m, graph_seed);

        const char* kinds[] = {"degeneracy", "natural", "random"};
        const std::string kind = kinds[i % 3];
        const Ordering l = kind == "random" ? Ordering::random(n, rng()) : make_ordering(kind, g);

        for (int r : {1, 2}) {
            const Augmentation a = augment(g, l);
            const auto start = std::chrono::steady_clock::now();
            const VerifyReport vr =
                verify_augmentation(g, l, a, r, effective_budget(cfg.budget, n));
            std::vector<std::string> violations = vr.violations();
            check_eltrees(g, l, violations);
            const Graph t = a.tree();
            const Walk w = tree_to_kwalk(t);
            const SuccessorRelation s = walk_to_successor(w);
            if (!verify_successor(s, n) || !successor_supported(t, w, s))
                violations.push_back("successor law failed");

            ExperimentRecord rec;
            rec.instance = "random_gnm_" + std::to_string(n) + "_" + std::to_string(m);
            rec.seed = graph_seed;
            rec.n = n;
            rec.m = g.m();
            rec.ordering_kind = kind;
            rec.r = r;
            rec.col_2r = vr.bound.col_2r;
            rec.adm_value = vr.bound.adm_value;
            rec.adm_is_exact = vr.bound.adm_is_exact;
            rec.bound = vr.bound.bound;
            rec.margin = vr.bound.margin;
            rec.times.total_s = seconds_since(start);
            records.push_back(rec);

            if (!violations.empty()) {
                all_ok = false;
                failures.push_back(json{{"instance", rec.instance},
                                        {"seed", rec.seed},
                                        {"ordering", kind},
                                        {"r", r},
                                        {"violations", violations}});
            }
        }
    }

    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& rec : records) out.push_back(to_json(rec));
        write_output(cfg.out, json{{"records", out}, {"failures", failures},
                                   {"ok", all_ok}}.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << experiment_csv_header() << "\n";
        for (const auto& rec : records) out << experiment_csv_row(rec) << "\n";
        write_output(cfg.out, out.str());
    }
    std::cerr << "suite: " << records.size() << " records, "
              << (all_ok ? "all passed" : "FAILURES (see report)") << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-3 spanning-tree augmentation toolkit"};
    app.require_subcommand(1);

    GenConfig gen;
    auto* gen_cmd = app.add_subcommand(
        "gen", "generate a graph (grid R C | torus R C | random_gnm N M | random_regular N D | "
               "star N | path N | clique N | figure1)");
    gen_cmd->add_option("family", gen.family, "generator family")->required();
    gen_cmd->add_option("params", gen.params, "family parameters");
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

    PipelineConfig aug;
    auto* aug_cmd = app.add_subcommand("augment", "build the degree-3 spanning tree T");
    aug_cmd->add_option("graph", aug.graph_path, "input graph file")->required();
    aug_cmd->add_option("--ordering", aug.ordering,
                        "file:PATH | degeneracy | natural | random:SEED");
    aug_cmd->add_option("--r", aug.r, "bound radius for the embedded report");
    std::uint64_t aug_budget = 0;
    auto* aug_budget_opt = aug_cmd->add_option("--budget", aug_budget, "exact-adm node budget");
    aug_cmd->add_option("--out", aug.out, "T edge-list path (JSON report lands at PATH.json)");

    PipelineConfig ver;
    auto* ver_cmd = app.add_subcommand("verify", "verify the construction and its bound");
    ver_cmd->add_option("graph", ver.graph_path, "input graph file")->required();
    ver_cmd->add_option("--ordering", ver.ordering,
                        "file:PATH | degeneracy | natural | random:SEED");
    ver_cmd->add_option("--r", ver.r, "admissibility radius");
    std::uint64_t ver_budget = 0;
    auto* ver_budget_opt = ver_cmd->add_option("--budget", ver_budget, "exact-adm node budget");
    ver_cmd->add_option("--augmentation", ver.augmentation_path,
                        "verify this augmentation JSON instead of recomputing");
    ver_cmd->add_option("--out", ver.out, "JSON report path (default stdout)");

    PipelineConfig suc;
    auto* suc_cmd = app.add_subcommand("succ", "emit the successor order of V");
    suc_cmd->add_option("graph", suc.graph_path, "input graph file")->required();
    suc_cmd->add_option("--ordering", suc.ordering,
                        "file:PATH | degeneracy | natural | random:SEED");
    suc_cmd->add_option("--out", suc.out, "successor file path (default stdout)");

    BenchConfig bench;
    auto* bench_cmd = app.add_subcommand("bench", "time the augment pipeline across sizes");
    bench_cmd->add_option("--family", bench.family, "grid | random_gnm");
    bench_cmd->add_option("--sizes", bench.sizes, "comma list: 500x500,1000x1000 or n values");
    bench_cmd->add_option("--reps", bench.reps, "repetitions per size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "seed for random families");
    bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");

    SuiteConfig suite;
    auto* suite_cmd = app.add_subcommand("suite", "randomised end-to-end verification batch");
    suite_cmd->add_option("--count", suite.count, "number of instances")
        ->check(CLI::PositiveNumber);
    suite_cmd->add_option("--seed", suite.seed, "suite seed");
    std::uint64_t suite_budget = 0;
    auto* suite_budget_opt = suite_cmd->add_option("--budget", suite_budget, "exact-adm budget");
    suite_cmd->add_option("--out", suite.out, "report path (default stdout)");
    suite_cmd->add_option("--format", suite.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (aug_budget_opt->count() > 0) aug.budget = aug_budget;
    if (ver_budget_opt->count() > 0) ver.budget = ver_budget;
    if (suite_budget_opt->count() > 0) suite.budget = suite_budget;

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (aug_cmd->parsed()) return cmd_augment(aug);
        if (ver_cmd->parsed()) return cmd_verify(ver);
        if (suc_cmd->parsed()) return cmd_succ(suc);
        if (bench_cmd->parsed()) return cmd_bench(bench);
        if (suite_cmd->parsed()) return cmd_suite(suite);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
