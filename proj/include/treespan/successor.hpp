#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// Closed-walk traversal of a tree: the Euler tour of a DFS rooted at the
/// lowest-id leaf (the lowest-id vertex when n = 1), children visited in
/// ascending id, with the final step back to the root omitted. Every non-root
/// vertex appears exactly deg(v) <= 3 times and the root once; every tree
/// edge appears exactly twice except the root's single incident edge, once.
struct Walk {
    std::vector<int> seq;                  // visited vertices in walk order
    std::vector<std::vector<int>> visits;  // per vertex, its positions in seq

    int length() const { return static_cast<int>(seq.size()); }
    int visit_count(int v) const { return static_cast<int>(visits.at(v).size()); }
};

/// Throws std::invalid_argument unless t is a tree (connected, m = n-1) of
/// maximum degree at most 3.
Walk tree_to_kwalk(const Graph& t);

/// Vertices ordered by first visit along a walk, together with the derived
/// consecutive-pair relation; (V, pairs) is a directed path of length n-1.
struct SuccessorRelation {
    std::vector<int> order;  // vertices by first visit

    int n() const { return static_cast<int>(order.size()); }
    std::vector<std::pair<int, int>> pairs() const;
};

SuccessorRelation walk_to_successor(const Walk& w);

/// True iff the order is a permutation of {0..n-1} (so the pair set has size
/// n-1 and forms a directed path).
bool verify_successor(const SuccessorRelation& s, int n);

/// True iff each consecutive successor pair is joined by the walk segment
/// between their first visits and every step of that segment is a t-edge:
/// the relation is supported by the augmented structure.
bool successor_supported(const Graph& t, const Walk& w, const SuccessorRelation& s);

/// Vertices in successor order, one per line, trailing newline.
std::string successor_to_text(const SuccessorRelation& s);

}  // namespace treespan
