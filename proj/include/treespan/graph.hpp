#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treespan {

/// Unordered vertex pair, stored canonically as (min, max).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Sorted, duplicate-free list of unordered vertex pairs. Self-pairs are
/// rejected at insertion.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges);

    void add(int u, int v);
    void reserve(std::size_t k) { edges_.reserve(k); }

    bool contains(int u, int v) const;
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    bool operator==(const EdgeSet& other) const { return edges_ == other.edges_; }

private:
    std::vector<Edge> edges_;  // kept sorted and unique
};

/// Error raised by the file-format parsers; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction; concurrent reads are safe.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph from an edge list. Duplicate edges are collapsed
    /// and self-loops dropped; both set a warning flag. Vertex ids outside
    /// [0, n) are an error.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    long long m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    /// All edges as a canonical sorted list.
    std::vector<Edge> edges() const;

    /// New graph on the same vertex set with `extra` added (duplicates merge).
    Graph add_edges(const EdgeSet& extra) const;

    bool had_duplicate_edges() const { return had_duplicates_; }
    bool had_self_loops() const { return had_self_loops_; }

    /// Verifies simplicity and symmetry invariants; throws std::logic_error
    /// on violation. Used after parsing and in tests.
    void check_invariants() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
    bool had_duplicates_ = false;
    bool had_self_loops_ = false;
};

/// Maximal connected vertex sets, each sorted ascending, ordered by their
/// minimum vertex id.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Subgraph induced by `vertices` (need not be sorted). Returns the graph on
/// remapped ids 0..k-1 plus the new-id -> old-id table.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_id;  // new id -> original id
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Edge-list format: header "n m", then m lines "u v" (0-based); '#' starts a
/// comment. DIMACS: "p tw n m" or "p edge n m" header, "c" comments, 1-based
/// edge lines "e u v" (bare "u v" also accepted).
Graph parse_edge_list(std::string_view text);
Graph parse_dimacs(std::string_view text);

/// Dispatches on the leading token ('c'/'p' -> DIMACS, otherwise edge list).
Graph parse_graph_auto(std::string_view text);
Graph load_graph_file(const std::string& path);

std::string write_edge_list(const Graph& g);

}  // namespace treespan
