#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "treespan/augment.hpp"
#include "treespan/generators.hpp"
#include "treespan/graph.hpp"
#include "treespan/reports.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using treespan::Graph;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("treespan_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("stdout_" + std::to_string(counter) + ".txt");
    const fs::path err = scratch_dir() / ("stderr_" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + TREESPAN_CLI_PATH + "\" " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = rc == -1 ? -1 : WEXITSTATUS(rc);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("cli: gen writes deterministic edge lists") {
    const auto grid = run_cli("gen grid 3 3");
    CHECK(grid.exit_code == 0);
    const Graph g = treespan::parse_graph_auto(grid.out);
    CHECK(g.n() == 9);
    CHECK(g.m() == 12);

    const fs::path fig_path = scratch_dir() / "figure.edges";
    const auto fig = run_cli("gen figure1 --out " + fig_path.string());
    CHECK(fig.exit_code == 0);
    const Graph f = treespan::load_graph_file(fig_path.string());
    CHECK(f.n() == 23);
    CHECK(f.m() == 24);
    CHECK(f.has_edge(0, 21));

    const auto a = run_cli("gen random_gnm 100 200 --seed 7");
    const auto b = run_cli("gen random_gnm 100 200 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    CHECK(run_cli("gen moebius 3").exit_code == 2);
    CHECK(run_cli("gen grid 3").exit_code == 2);
    CHECK(run_cli("gen grid 0 5").exit_code == 2);
}

TEST_CASE("cli: augment emits the report on stdout or files beside --out") {
    const fs::path grid_path = scratch_dir() / "grid.edges";
    REQUIRE(run_cli("gen grid 3 3 --out " + grid_path.string()).exit_code == 0);

    const auto direct = run_cli("augment " + grid_path.string() + " --r 1");
    CHECK(direct.exit_code == 0);
    const json report = json::parse(direct.out);
    CHECK(report.at("n") == 9);
    CHECK(report.at("component_count") == 1);
    CHECK(report.at("f").size() == 8);
    CHECK(report.at("bound_report").at("holds") == true);
    CHECK(report.at("bound_report").at("adm_is_exact") == true);
    long long vertices = 0;
    for (const auto& count : report.at("degree_histogram")) vertices += count.get<long long>();
    CHECK(vertices == 9);

    const fs::path tree_path = scratch_dir() / "grid_tree.edges";
    const auto filed = run_cli("augment " + grid_path.string() + " --out " + tree_path.string());
    CHECK(filed.exit_code == 0);
    const Graph t = treespan::load_graph_file(tree_path.string());
    CHECK(t.n() == 9);
    CHECK(t.m() == 8);
    CHECK(treespan::is_connected(t));
    for (int v = 0; v < t.n(); ++v) CHECK(t.degree(v) <= 3);
    const json sidecar = json::parse(slurp(tree_path.string() + ".json"));
    CHECK(sidecar.at("f").size() == 8);

    CHECK(run_cli("augment " + scratch_dir().string() + "/missing.edges").exit_code == 2);
}

TEST_CASE("cli: verify approves the honest pipeline end to end") {
    const fs::path fig_path = scratch_dir() / "fig_verify.edges";
    REQUIRE(run_cli("gen figure1 --out " + fig_path.string()).exit_code == 0);

    for (const std::string ordering : {"natural", "degeneracy", "random:11"}) {
        const auto res =
            run_cli("verify " + fig_path.string() + " --ordering " + ordering + " --r 2");
        CHECK(res.exit_code == 0);
        const json report = json::parse(res.out);
        CHECK(report.at("ok") == true);
        CHECK(report.at("violations").empty());
        CHECK(report.at("augmentation").at("bound").at("holds") == true);
        CHECK(report.at("successor").at("checked") == true);
        CHECK(report.at("successor").at("is_permutation") == true);
        CHECK(report.at("successor").at("supported") == true);
        CHECK(report.at("successor").at("max_visits").get<int>() <= 3);
        for (const auto& comp : report.at("eltree")) CHECK(comp.at("ok") == true);
    }
}

TEST_CASE("cli: verify rejects a corrupted augmentation with exit 1") {
    const fs::path fig_path = scratch_dir() / "fig_mutate.edges";
    REQUIRE(run_cli("gen figure1 --out " + fig_path.string()).exit_code == 0);

    const auto honest = run_cli("augment " + fig_path.string() + " --ordering natural");
    REQUIRE(honest.exit_code == 0);
    json mutated = json::parse(honest.out);

    // Inject a degree-4 vertex: vertex 4 already carries three tree edges,
    // so retarget an unrelated edge onto it.
    json f = json::array();
    for (const auto& e : mutated.at("f")) {
        if (e[0] == 8 && e[1] == 10)
            f.push_back(json::array({4, 14}));
        else
            f.push_back(e);
    }
    mutated["f"] = f;
    const fs::path bad_path = scratch_dir() / "mutated_augmentation.json";
    spit(bad_path, mutated.dump(2));

    const auto res = run_cli("verify " + fig_path.string() + " --ordering natural --augmentation " +
                             bad_path.string());
    CHECK(res.exit_code == 1);
    const json report = json::parse(res.out);
    CHECK(report.at("ok") == false);
    CHECK(!report.at("violations").empty());

    // An honest stored augmentation round-trips to exit 0.
    const fs::path good_path = scratch_dir() / "honest_augmentation.json";
    spit(good_path, honest.out);
    CHECK(run_cli("verify " + fig_path.string() + " --ordering natural --augmentation " +
                  good_path.string())
              .exit_code == 0);

    // Garbage JSON is an input error, not a verification failure.
    spit(bad_path, "{ not json");
    CHECK(run_cli("verify " + fig_path.string() + " --augmentation " + bad_path.string())
              .exit_code == 2);
}

TEST_CASE("cli: succ emits one vertex per line") {
    const fs::path fig_path = scratch_dir() / "fig_succ.edges";
    REQUIRE(run_cli("gen figure1 --out " + fig_path.string()).exit_code == 0);
    const auto res = run_cli("succ " + fig_path.string() + " --ordering natural");
    CHECK(res.exit_code == 0);
    std::istringstream in(res.out);
    std::string line;
    std::vector<char> seen(23, 0);
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        const int v = std::stoi(line);
        REQUIRE(v >= 0);
        REQUIRE(v < 23);
        CHECK(!seen[v]);
        seen[v] = 1;
    }
    CHECK(lines == 23);
}

TEST_CASE("cli: ordering files are honoured and validated") {
    const fs::path grid_path = scratch_dir() / "grid_ord.edges";
    REQUIRE(run_cli("gen grid 2 3 --out " + grid_path.string()).exit_code == 0);

    const fs::path ord_path = scratch_dir() / "ordering.txt";
    spit(ord_path, "5\n4\n3\n2\n1\n0\n");
    const auto ok = run_cli("augment " + grid_path.string() + " --ordering file:" +
                            ord_path.string());
    CHECK(ok.exit_code == 0);

    spit(ord_path, "0\n1\n2\n");  // wrong vertex count
    CHECK(run_cli("augment " + grid_path.string() + " --ordering file:" + ord_path.string())
              .exit_code == 2);
    spit(ord_path, "0\n1\n2\n3\n4\n4\n");  // duplicate
    CHECK(run_cli("augment " + grid_path.string() + " --ordering file:" + ord_path.string())
              .exit_code == 2);
    CHECK(run_cli("augment " + grid_path.string() + " --ordering sideways").exit_code == 2);
}

TEST_CASE("cli: bench prints a csv with one row per size") {
    const auto res = run_cli("bench --family grid --sizes 10x10,20x20 --reps 2");
    CHECK(res.exit_code == 0);
    std::istringstream in(res.out);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "n,m,seconds_best,seconds_mean,seconds_stddev,reps");
    int rows = 0;
    std::string row;
    while (std::getline(in, row)) {
        ++rows;
        std::replace(row.begin(), row.end(), ',', ' ');
        std::istringstream fields(row);
        long long n = 0, m = 0;
        double best = 0, mean = 0, stddev = 0;
        int reps = 0;
        REQUIRE((fields >> n >> m >> best >> mean >> stddev >> reps));
        CHECK(n == (rows == 1 ? 100 : 400));
        CHECK(m == (rows == 1 ? 180 : 760));
        CHECK(best >= 0.0);
        CHECK(mean >= best);
        CHECK(reps == 2);
    }
    CHECK(rows == 2);

    const auto gnm = run_cli("bench --family random_gnm --sizes 1000,2000 --reps 1 --seed 3");
    CHECK(gnm.exit_code == 0);
    CHECK(run_cli("bench --family bogus --sizes 10").exit_code == 2);
}

TEST_CASE("cli: suite runs a randomized batch and reports every record") {
    const auto res = run_cli("suite --count 12 --seed 5 --format json");
    CHECK(res.exit_code == 0);
    const json report = json::parse(res.out);
    CHECK(report.at("ok") == true);
    CHECK(report.at("records").size() == 24);  // one record per (instance, r in {1,2})
    CHECK(report.at("failures").empty());
    for (const auto& rec : report.at("records")) {
        CHECK(rec.at("adm_is_exact") == true);
        CHECK(rec.at("margin").get<long long>() >= 0);
        CHECK(rec.at("bound").get<long long>() >=
              rec.at("col_2r").get<long long>() * 3);
    }

    const auto csv = run_cli("suite --count 5 --seed 6 --format csv");
    CHECK(csv.exit_code == 0);
    std::istringstream in(csv.out);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == treespan::experiment_csv_header());
    int rows = 0;
    std::string row;
    while (std::getline(in, row))
        if (!row.empty()) ++rows;
    CHECK(rows == 10);
}

TEST_CASE("augmentation reports round-trip through json") {
    const Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 5}, {4, 5}});
    const auto a = treespan::augment(g, treespan::Ordering::natural(7));
    const auto structure = treespan::augmentation_structure(g, a);
    const json j = treespan::augmentation_to_json(a, structure, nullptr);
    const auto back = treespan::augmentation_from_json(j);
    CHECK(back.n == a.n);
    CHECK(back.component_count == a.component_count);
    CHECK(back.f == a.f);
    CHECK(back.chain_edges == a.chain_edges);
    CHECK(back.component_min == a.component_min);
    CHECK(back.chain_vertex == a.chain_vertex);
    REQUIRE(back.f_new.size() == a.f_new.size());
    for (std::size_t i = 0; i < a.f_new.size(); ++i) {
        CHECK(back.f_new[i].e == a.f_new[i].e);
        CHECK(back.f_new[i].origin == a.f_new[i].origin);
    }
    CHECK(j.at("bound_report").is_null());

    CHECK_THROWS_AS(treespan::augmentation_from_json(json{{"n", 3}}), std::invalid_argument);
    json bad = j;
    bad["f"] = json::array({json::array({0})});
    CHECK_THROWS_AS(treespan::augmentation_from_json(bad), std::invalid_argument);
}
