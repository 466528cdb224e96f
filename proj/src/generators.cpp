#include "treespan/generators.hpp"

#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "treespan/ordering.hpp"  // uniform_below

namespace treespan {

namespace {

int cell(int r, int c, int cols) { return r * cols + c; }

long long checked_pairs(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

}  // namespace

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: dimensions must be positive");
    if (static_cast<long long>(rows) * cols > 100'000'000LL)
        throw std::invalid_argument("grid: too many vertices");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(rows) * cols * 2);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(cell(r, c, cols), cell(r, c + 1, cols));
            if (r + 1 < rows) edges.emplace_back(cell(r, c, cols), cell(r + 1, c, cols));
        }
    }
    return Graph::from_edges(rows * cols, edges);
}

Graph make_torus(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("torus: dimensions must be positive");
    if (static_cast<long long>(rows) * cols > 100'000'000LL)
        throw std::invalid_argument("torus: too many vertices");
    std::set<Edge> edges;  // wraparound duplicates collapse silently
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int u = cell(r, c, cols);
            const int right = cell(r, (c + 1) % cols, cols);
            const int down = cell((r + 1) % rows, c, cols);
            if (u != right) edges.insert(make_edge(u, right));
            if (u != down) edges.insert(make_edge(u, down));
        }
    }
    return Graph::from_edges(rows * cols, {edges.begin(), edges.end()});
}

Graph make_random_gnm(int n, long long m, std::uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("random_gnm: negative parameters");
    if (m > checked_pairs(n)) throw std::invalid_argument("random_gnm: too many edges");
    std::mt19937_64 rng(seed);
    std::unordered_set<long long> used;
    used.reserve(static_cast<std::size_t>(m) * 2);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (static_cast<long long>(edges.size()) < m) {
        const int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        const Edge e = make_edge(u, v);
        const long long key = static_cast<long long>(e.first) * n + e.second;
        if (used.insert(key).second) edges.push_back(e);
    }
    return Graph::from_edges(n, edges);
}

Graph make_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0 || d >= std::max(n, 1))
        throw std::invalid_argument("random_regular: need 0 <= d < n");
    if (static_cast<long long>(n) * d % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;

    // Configuration model: shuffle the stubs, pair them consecutively, and
    // resample whenever a self-loop or duplicate appears.
    for (int attempt = 0; attempt < 2000; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
        std::set<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; simple && i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) simple = false;
            else simple = edges.insert(make_edge(stubs[i], stubs[i + 1])).second;
        }
        if (simple) return Graph::from_edges(n, {edges.begin(), edges.end()});
    }
    throw std::runtime_error("random_regular: no simple pairing found");
}

Graph make_star(int n) {
    if (n < 1) throw std::invalid_argument("star: need n >= 1");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph make_clique(int n) {
    if (n < 1) throw std::invalid_argument("clique: need n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph make_figure1() {
    // 23 vertices whose numeric labels give the intended ordering; 24 edges.
    static const std::vector<Edge> kEdges = {
        {0, 1},  {0, 21}, {1, 11}, {1, 21}, {2, 6},   {2, 8},   {2, 10},  {3, 10},
        {3, 14}, {4, 5},  {4, 15}, {6, 11}, {7, 9},   {7, 15},  {8, 12},  {8, 16},
        {10, 14}, {11, 19}, {13, 15}, {13, 18}, {15, 17}, {15, 20}, {15, 21}, {15, 22}};
    return Graph::from_edges(23, kEdges);
}

std::string GeneratorSpec::name() const {
    std::ostringstream out;
    out << family;
    if (family == "grid" || family == "torus") {
        if (params.size() == 2) out << '_' << params[0] << 'x' << params[1];
    } else {
        for (long long p : params) out << '_' << p;
    }
    if (family == "random_gnm" || family == "random_regular") out << "_s" << seed;
    return out.str();
}

Graph generate(const GeneratorSpec& spec) {
    const auto want = [&](std::size_t k) {
        if (spec.params.size() != k)
            throw std::invalid_argument(spec.family + ": expected " + std::to_string(k) +
                                        " parameter(s)");
    };
    const auto as_int = [&](long long v) {
        if (v < 0 || v > 100'000'000LL)
            throw std::invalid_argument(spec.family + ": parameter out of range");
        return static_cast<int>(v);
    };
    if (spec.family == "grid") {
        want(2);
        return make_grid(as_int(spec.params[0]), as_int(spec.params[1]));
    }
    if (spec.family == "torus") {
        want(2);
        return make_torus(as_int(spec.params[0]), as_int(spec.params[1]));
    }
    if (spec.family == "random_gnm") {
        want(2);
        return make_random_gnm(as_int(spec.params[0]), spec.params[1], spec.seed);
    }
    if (spec.family == "random_regular") {
        want(2);
        return make_random_regular(as_int(spec.params[0]), as_int(spec.params[1]), spec.seed);
    }
    if (spec.family == "star") {
        want(1);
        return make_star(as_int(spec.params[0]));
    }
    if (spec.family == "path") {
        want(1);
        return make_path(as_int(spec.params[0]));
    }
    if (spec.family == "clique") {
        want(1);
        return make_clique(as_int(spec.params[0]));
    }
    if (spec.family == "figure1") {
        want(0);
        return make_figure1();
    }
    throw std::invalid_argument("unknown generator family: " + spec.family);
}

}  // namespace treespan
