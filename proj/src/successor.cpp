#include "treespan/successor.hpp"

#include <algorithm>
#include <sstream>

namespace treespan {

Walk tree_to_kwalk(const Graph& t) {
    const int n = t.n();
    if (n == 0) throw std::invalid_argument("tree_to_kwalk: empty graph");
    if (t.m() != n - 1 || !is_connected(t))
        throw std::invalid_argument("tree_to_kwalk: input is not a tree");
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) > 3) throw std::invalid_argument("tree_to_kwalk: degree exceeds 3");
        if (root == -1 && t.degree(v) <= 1) root = v;  // lowest-id leaf
    }

    Walk w;
    w.seq.reserve(2 * static_cast<std::size_t>(n));
    w.seq.push_back(root);
    // Iterative Euler tour, children in ascending id (adjacency is sorted):
    // append on every descent and on every return to the parent.
    std::vector<int> parent(n, -1);
    std::vector<std::size_t> next(n, 0);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        const int u = stack.back();
        const auto& nbrs = t.neighbors(u);
        bool descended = false;
        while (next[u] < nbrs.size()) {
            const int v = nbrs[next[u]++];
            if (parent[v] == -1) {
                parent[v] = u;
                w.seq.push_back(v);
                stack.push_back(v);
                descended = true;
                break;
            }
        }
        if (!descended) {
            stack.pop_back();
            if (!stack.empty()) w.seq.push_back(stack.back());
        }
    }
    if (n >= 2) w.seq.pop_back();  // drop the final step back to the root

    w.visits.assign(n, {});
    for (std::size_t i = 0; i < w.seq.size(); ++i)
        w.visits[w.seq[i]].push_back(static_cast<int>(i));
    return w;
}

std::vector<std::pair<int, int>> SuccessorRelation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        out.emplace_back(order[i], order[i + 1]);
    return out;
}

SuccessorRelation walk_to_successor(const Walk& w) {
    SuccessorRelation s;
    int bound = static_cast<int>(w.visits.size());
    for (int v : w.seq) bound = std::max(bound, v + 1);  // tolerate bare walks
    std::vector<char> seen(bound, 0);
    for (int v : w.seq) {
        if (v >= 0 && !seen[v]) {
            seen[v] = 1;
            s.order.push_back(v);
        }
    }
    return s;
}

bool verify_successor(const SuccessorRelation& s, int n) {
    if (static_cast<int>(s.order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : s.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool successor_supported(const Graph& t, const Walk& w, const SuccessorRelation& s) {
    if (w.seq.empty() || !verify_successor(s, t.n())) return false;
    if (s.order.empty() || s.order.front() != w.seq.front()) return false;
    // bad_steps[i] = number of non-tree steps among the first i walk steps, so
    // a walk segment is all tree edges iff the count difference is zero.
    std::vector<int> first(t.n(), -1);
    for (int i = static_cast<int>(w.seq.size()) - 1; i >= 0; --i) first[w.seq[i]] = i;
    std::vector<int> bad_steps(w.seq.size(), 0);
    for (std::size_t i = 0; i + 1 < w.seq.size(); ++i)
        bad_steps[i + 1] = bad_steps[i] + (t.has_edge(w.seq[i], w.seq[i + 1]) ? 0 : 1);
    for (const auto& [a, b] : s.pairs()) {
        if (first[a] == -1 || first[b] == -1 || first[a] >= first[b]) return false;
        if (bad_steps[first[b]] - bad_steps[first[a]] != 0) return false;
    }
    return true;
}

std::string successor_to_text(const SuccessorRelation& s) {
    std::ostringstream out;
    for (int v : s.order) out << v << '\n';
    return out.str();
}

}  // namespace treespan
