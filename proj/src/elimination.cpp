#include "treespan/elimination.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "treespan/disjoint_sets.hpp"

namespace treespan {

std::vector<std::vector<int>> EliminationTree::children() const {
    std::vector<std::vector<int>> kids(parent.size());
    for (int v = 0; v < n(); ++v)
        if (parent[v] != -1) kids[parent[v]].push_back(v);  // ascending v
    return kids;
}

EliminationTree elimination_tree(const Graph& g, const Ordering& l, std::uint64_t* ops_out) {
    const int n = g.n();
    if (n == 0) throw std::invalid_argument("elimination_tree: empty graph");
    if (l.size() != n) throw std::invalid_argument("elimination_tree: ordering size mismatch");

    // Scan positions from the L-largest down. The classes over the processed
    // suffix are exactly the components of G restricted to it; when u meets a
    // class, that component's rank-minimum vertex is its elimination-tree
    // root, hence u's child. After the merges u itself is the class minimum.
    DisjointSets ds(n, l.ranks());
    EliminationTree s;
    s.root = l.vertex_at(0);
    s.parent.assign(n, -1);
    int classes = n;
    std::uint64_t ops = 0;  // one per find, two per union
    for (int pos = n - 1; pos >= 0; --pos) {
        const int u = l.vertex_at(pos);
        for (int v : g.neighbors(u)) {
            if (l.rank(v) < pos) continue;  // not processed yet
            const int child = ds.class_min(v);
            ++ops;
            if (child == u) continue;  // this component already met u
            s.parent[child] = u;
            ds.unite(u, v);
            ops += 2;
            --classes;
        }
    }
    if (classes != 1) throw std::invalid_argument("elimination_tree: disconnected graph");
    if (ops_out) *ops_out = ops;

    s.depth.assign(n, 0);
    for (int pos = 1; pos < n; ++pos) {  // parents are L-smaller, so already done
        const int v = l.vertex_at(pos);
        s.depth[v] = s.depth[s.parent[v]] + 1;
    }
    return s;
}

namespace {

// Iterative preorder over the children lists; returns visit order, or an
// incomplete list when `parent` is not a tree rooted at `root`.
std::vector<int> preorder(const std::vector<std::vector<int>>& kids, int root) {
    std::vector<int> order;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        if (order.size() > kids.size()) break;  // cycle guard
        for (auto it = kids[u].rbegin(); it != kids[u].rend(); ++it) stack.push_back(*it);
    }
    return order;
}

}  // namespace

std::vector<int> subtree_members(const EliminationTree& s, int u) {
    if (u < 0 || u >= s.n()) throw std::out_of_range("subtree_members: vertex out of range");
    std::vector<int> members = preorder(s.children(), u);
    std::sort(members.begin(), members.end());
    return members;
}

EltreeReport check_eltree_properties(const Graph& g, const Ordering& l,
                                     const EliminationTree& s) {
    EltreeReport report;
    const int n = g.n();
    const auto violate = [&](int which, const std::string& text) {
        report.ok = false;
        report.assertion_ok[which - 1] = false;
        report.violations.push_back("(" + std::to_string(which) + ") " + text);
    };

    bool malformed = s.n() != n || l.size() != n || s.root < 0 || s.root >= n;
    for (int v = 0; !malformed && v < n; ++v)
        malformed = s.parent[v] < -1 || s.parent[v] >= n || ((s.parent[v] == -1) != (v == s.root));
    if (malformed) {
        report.ok = false;
        for (bool& a : report.assertion_ok) a = false;
        report.violations.push_back("malformed tree: size, root, or parent range mismatch");
        return report;
    }
    const auto kids = s.children();
    const std::vector<int> order = preorder(kids, s.root);
    if (static_cast<int>(order.size()) != n) {
        report.ok = false;
        for (bool& a : report.assertion_ok) a = false;
        report.violations.push_back("parent array is not a tree spanning all vertices");
        return report;
    }

    // Preorder intervals give O(1) ancestor tests.
    std::vector<int> tin(n), tout(n);
    for (int i = 0; i < n; ++i) tin[order[i]] = i;
    for (int i = n - 1; i >= 0; --i) {
        const int v = order[i];
        tout[v] = i;
        for (int c : kids[v]) tout[v] = std::max(tout[v], tout[c]);
    }
    const auto is_ancestor = [&](int a, int d) { return tin[a] <= tin[d] && tin[d] <= tout[a]; };

    // 1. every subtree induces a connected subgraph
    for (int u = 0; u < n; ++u) {
        const auto members = subtree_members(s, u);
        if (!is_connected(induced_subgraph(g, members).graph))
            violate(1, "subtree of " + std::to_string(u) + " is disconnected in G");
    }
    // 2. parents, hence ancestors, are L-smaller
    for (int v = 0; v < n; ++v)
        if (s.parent[v] != -1 && !l.less(s.parent[v], v))
            violate(2, "parent of " + std::to_string(v) + " is not L-smaller");
    // 3. edge endpoints are ancestor-related, the L-smaller one on top
    for (const auto& [x, y] : g.edges()) {
        const int top = l.less(x, y) ? x : y;
        const int bottom = top == x ? y : x;
        if (!is_ancestor(top, bottom))
            violate(3, "edge " + std::to_string(x) + "-" + std::to_string(y) +
                           " endpoints are not ancestor-related");
    }
    // 4. a G-neighbour inside each child subtree
    for (int u = 0; u < n; ++u) {
        for (int c : kids[u]) {
            bool hit = false;
            for (int w : g.neighbors(u))
                if (is_ancestor(c, w)) { hit = true; break; }
            if (!hit)
                violate(4, "vertex " + std::to_string(u) + " has no neighbour in child subtree of " +
                               std::to_string(c));
        }
    }
    return report;
}

std::string eltree_to_text(const EliminationTree& s) {
    std::ostringstream out;
    for (int v = 0; v < s.n(); ++v) {
        out << v << ' ';
        if (s.parent[v] == -1)
            out << '-';
        else
            out << s.parent[v];
        out << '\n';
    }
    return out.str();
}

EliminationTree eltree_from_text(std::string_view text) {
    std::vector<std::pair<int, int>> entries;  // (vertex, parent or -1)
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        std::string a, b;
        if (in >> a) {
            if (!(in >> b) || (in >> std::ws, !in.eof()))
                throw parse_error("expected 'vertex parent'", line_no);
            int v = -1;
            auto [p1, e1] = std::from_chars(a.data(), a.data() + a.size(), v);
            if (e1 != std::errc{} || p1 != a.data() + a.size() || v < 0)
                throw parse_error("bad vertex '" + a + "'", line_no);
            int p = -1;
            if (b != "-") {
                auto [p2, e2] = std::from_chars(b.data(), b.data() + b.size(), p);
                if (e2 != std::errc{} || p2 != b.data() + b.size() || p < 0)
                    throw parse_error("bad parent '" + b + "'", line_no);
            }
            entries.emplace_back(v, p);
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    const int n = static_cast<int>(entries.size());
    EliminationTree s;
    s.parent.assign(n, -2);
    for (const auto& [v, p] : entries) {
        if (v >= n) throw parse_error("vertex " + std::to_string(v) + " outside [0, n)", n);
        if (p >= n) throw parse_error("parent " + std::to_string(p) + " outside [0, n)", n);
        if (s.parent[v] != -2) throw parse_error("vertex " + std::to_string(v) + " listed twice", n);
        s.parent[v] = p;
        if (p == -1) {
            if (s.root != -1) throw parse_error("two roots", n);
            s.root = v;
        }
    }
    if (n == 0) throw parse_error("empty elimination tree", 1);
    if (s.root == -1) throw parse_error("no root line", n);

    const std::vector<int> order = preorder(s.children(), s.root);
    if (static_cast<int>(order.size()) != n)
        throw parse_error("parent array is not a tree", n);
    s.depth.assign(n, 0);
    for (int v : order)
        if (v != s.root) s.depth[v] = s.depth[s.parent[v]] + 1;
    return s;
}

}  // namespace treespan
