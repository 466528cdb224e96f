#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/ordering.hpp"

namespace treespan {

/// Rooted elimination tree of a connected graph: recursively, the root is the
/// L-minimum vertex and the subtrees are the elimination trees of the
/// components left after removing it.
struct EliminationTree {
    int root = -1;
    std::vector<int> parent;  // -1 for the root
    std::vector<int> depth;   // root depth 0

    int n() const { return static_cast<int>(parent.size()); }
    /// Children lists, derived from the parent array.
    std::vector<std::vector<int>> children() const;
};

/// Builds the elimination tree by a decreasing-rank union-find scan: when u is
/// processed, each class among its L-larger neighbours is a component of the
/// processed suffix, and its rank-minimum vertex becomes a child of u.
/// Throws std::invalid_argument on empty or disconnected input (split the
/// graph with connected_components first).
///
/// When `ops_out` is given it receives the number of union-find operations
/// (finds + unions) the scan performed, which stays linear in m + n.
EliminationTree elimination_tree(const Graph& g, const Ordering& l,
                                 std::uint64_t* ops_out = nullptr);

/// u together with all its descendants, sorted ascending.
std::vector<int> subtree_members(const EliminationTree& s, int u);

/// Structural verification of an elimination tree against its graph:
///   1. every subtree induces a connected subgraph,
///   2. parents (hence all ancestors) are L-smaller,
///   3. the endpoints of every edge are ancestor-related, the L-smaller one on top,
///   4. each vertex has a G-neighbour inside each child subtree.
/// Violations are report content, not errors. Intended for moderate sizes;
/// check 1 enumerates all subtrees.
struct EltreeReport {
    bool ok = true;
    std::vector<std::string> violations;
    bool assertion_ok[4] = {true, true, true, true};
};

EltreeReport check_eltree_properties(const Graph& g, const Ordering& l,
                                     const EliminationTree& s);

/// Parent-array text: n lines "vertex parent", the root's parent written "-".
std::string eltree_to_text(const EliminationTree& s);
EliminationTree eltree_from_text(std::string_view text);

}  // namespace treespan
