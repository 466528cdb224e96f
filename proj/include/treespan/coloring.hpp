#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/ordering.hpp"

namespace treespan {

/// Vertices strongly r-reachable from v: all u <=_L v joined to v by a path of
/// length <= r whose internal vertices are all >_L v. Contains v itself.
/// Returned sorted ascending.
std::vector<int> sreach(const Graph& g, const Ordering& l, int v, int r);

struct ColProfile {
    int r = 0;
    std::vector<int> sreach_size;  // per vertex
    int col_value = 0;             // max of sreach_size
    int argmax_vertex = -1;        // lowest vertex id among the maxima
};

ColProfile col(const Graph& g, const Ordering& l, int r);

/// Family of paths from a common start vertex; certificate for admissibility
/// lower bounds. Each path is a vertex sequence beginning at `start`.
struct PathFamily {
    int start = -1;
    int r = 0;
    std::vector<std::vector<int>> paths;

    int value() const { return static_cast<int>(paths.size()); }
};

/// Checks the family against the graph and ordering: every path starts at
/// `start`, has length <= r, ends L-below the start, is internally L-above it,
/// uses real edges, and the paths share no vertex but the start.
bool path_family_valid(const Graph& g, const Ordering& l, const PathFamily& family,
                       std::string* reason = nullptr);

struct AdmCertificate {
    int value = 0;
    PathFamily family;
};

/// Exact r-admissibility of v: enumerates every valid <=r path from v, then
/// solves maximum set packing by branch and bound. `budget` caps the combined
/// search nodes; exceeding it yields nullopt (never a silent lower bound).
std::optional<AdmCertificate> adm_exact(const Graph& g, const Ordering& l, int v, int r,
                                        std::uint64_t budget);

/// Max of adm_exact over all vertices; nullopt if any vertex ran out of budget.
std::optional<int> adm_graph(const Graph& g, const Ordering& l, int r, std::uint64_t budget);

/// Greedy lower bound: repeatedly commits the shortest valid path (lowest-id
/// tie-breaks) and removes its vertices. The certificate is always valid.
AdmCertificate adm_greedy_lower(const Graph& g, const Ordering& l, int v, int r);

int adm_graph_greedy(const Graph& g, const Ordering& l, int r);

/// Smallest-last ordering: repeatedly removes a minimum-degree vertex (ties by
/// lowest id) and places it at the large end. Minimises col_1.
Ordering degeneracy_ordering(const Graph& g);

struct BestOrdering {
    Ordering ordering;
    int value = 0;
};

/// Exhaustive minimiser of adm_r(G,L) over all n! orderings. Test oracle;
/// refuses n > 9.
BestOrdering best_ordering_bruteforce(const Graph& g, int r);

}  // namespace treespan
