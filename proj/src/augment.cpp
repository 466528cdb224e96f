#include "treespan/augment.hpp"

#include <algorithm>

#include "treespan/coloring.hpp"
#include "treespan/disjoint_sets.hpp"

namespace treespan {

std::vector<std::vector<int>> BackboneTree::children() const {
    std::vector<std::vector<int>> kids(parent.size());
    for (int v = 0; v < n(); ++v)
        if (parent[v] != -1) kids[parent[v]].push_back(v);
    return kids;
}

namespace {

struct ScanResult {
    std::vector<Edge> edges;  // backbone edges of every component
    DisjointSets ds;          // final classes = connected components
};

// Decreasing-rank union-find scan over the whole graph. Processing u visits
// its L-larger neighbours in increasing rank order; an edge joins exactly
// when it meets a class not yet attached to u, i.e. the L-smallest neighbour
// of u inside each child subtree is selected. After its merges, u is the
// rank-minimum of its class, so "already attached" is class_min(v) == u.
ScanResult backbone_scan(const Graph& g, const Ordering& l) {
    const int n = g.n();
    ScanResult result{{}, DisjointSets(n, l.ranks())};
    result.edges.reserve(n > 0 ? n - 1 : 0);
    std::vector<int> larger;
    for (int pos = n - 1; pos >= 0; --pos) {
        const int u = l.vertex_at(pos);
        larger.clear();
        for (int v : g.neighbors(u))
            if (l.rank(v) > pos) larger.push_back(v);
        std::sort(larger.begin(), larger.end(),
                  [&](int a, int b) { return l.rank(a) < l.rank(b); });
        for (int v : larger) {
            if (result.ds.class_min(v) == u) continue;
            result.edges.push_back(make_edge(u, v));
            result.ds.unite(u, v);
        }
    }
    return result;
}

// Parent array of the forest spanned by `edges`, rooted at `roots`; -1 there.
std::vector<int> root_forest(int n, const std::vector<Edge>& edges,
                             const std::vector<int>& roots) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(n, -2);
    std::vector<int> queue;
    for (int root : roots) {
        parent[root] = -1;
        queue.assign(1, root);
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            for (int v : adj[u]) {
                if (parent[v] == -2) {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
    }
    if (std::count(parent.begin(), parent.end(), -2) != 0)
        throw std::invalid_argument("root_forest: edges do not span all vertices from the roots");
    return parent;
}

// Per vertex u with children x_1 <_L ... <_L x_p: edge u-x_1 plus the sibling
// chain x_i-x_{i+1}. Sibling edges absent from G become new edges of origin u.
void emit_degree3_family(const Graph& g, const std::vector<int>& parent, const Ordering& l,
                         std::vector<Edge>& f, std::vector<NewEdge>& f_new) {
    const int n = static_cast<int>(parent.size());
    std::vector<std::vector<int>> kids(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] != -1) kids[parent[v]].push_back(v);
    for (int u = 0; u < n; ++u) {
        auto& x = kids[u];
        if (x.empty()) continue;
        std::sort(x.begin(), x.end(), [&](int a, int b) { return l.less(a, b); });
        f.push_back(make_edge(u, x[0]));  // a backbone edge, hence in E(G)
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const Edge e = make_edge(x[i], x[i + 1]);
            f.push_back(e);
            if (!g.has_edge(e.first, e.second)) f_new.push_back({e, u});
        }
    }
}

Augmentation assemble(const Graph& g, const Ordering& l, const std::vector<int>& parent,
                      const std::vector<std::vector<int>>& components) {
    Augmentation a;
    a.n = g.n();
    a.component_count = static_cast<int>(components.size());

    std::vector<Edge> f;
    f.reserve(a.n > 0 ? a.n - 1 : 0);
    emit_degree3_family(g, parent, l, f, a.f_new);
    std::sort(a.f_new.begin(), a.f_new.end(),
              [](const NewEdge& x, const NewEdge& y) { return x.e < y.e; });

    std::vector<int> deg(a.n, 0);
    for (const auto& [u, v] : f) {
        ++deg[u];
        ++deg[v];
    }
    for (const auto& comp : components) {
        a.component_min.push_back(comp.front());  // members sorted ascending
        int pick = -1;
        for (int v : comp)  // L-smallest vertex with T_i-degree <= 1
            if (deg[v] <= 1 && (pick == -1 || l.less(v, pick))) pick = v;
        a.chain_vertex.push_back(pick);  // every tree has one: it has leaves
    }
    for (std::size_t i = 0; i + 1 < components.size(); ++i) {
        const Edge e = make_edge(a.chain_vertex[i], a.chain_vertex[i + 1]);
        f.push_back(e);
        a.chain_edges.add(e.first, e.second);
    }
    a.f = EdgeSet(std::move(f));
    return a;
}

}  // namespace

BackboneTree build_backbone(const Graph& g, const Ordering& l) {
    if (g.n() == 0) throw std::invalid_argument("build_backbone: empty graph");
    if (l.size() != g.n()) throw std::invalid_argument("build_backbone: ordering size mismatch");
    ScanResult scan = backbone_scan(g, l);
    if (static_cast<int>(scan.edges.size()) != g.n() - 1)
        throw std::invalid_argument("build_backbone: disconnected graph");
    BackboneTree u;
    u.root = l.vertex_at(0);
    u.parent = root_forest(g.n(), scan.edges, {u.root});
    u.edges = EdgeSet(std::move(scan.edges));
    return u;
}

BackboneTree backbone_from_edges(const Graph& g, const EdgeSet& edges, int root) {
    if (root < 0 || root >= g.n()) throw std::invalid_argument("backbone_from_edges: bad root");
    if (static_cast<int>(edges.size()) != g.n() - 1)
        throw std::invalid_argument("backbone_from_edges: edge count is not n-1");
    for (const auto& [u, v] : edges)
        if (u < 0 || v >= g.n() || !g.has_edge(u, v))
            throw std::invalid_argument("backbone_from_edges: edge not in G");
    BackboneTree u;
    u.root = root;
    u.parent = root_forest(g.n(), edges.edges(), {root});  // throws if not spanning
    u.edges = edges;
    return u;
}

Graph Augmentation::tree() const { return Graph::from_edges(n, f.edges()); }

std::optional<int> Augmentation::origin_of(Edge e) const {
    const auto it = std::lower_bound(f_new.begin(), f_new.end(), e,
                                     [](const NewEdge& x, const Edge& key) { return x.e < key; });
    if (it == f_new.end() || it->e != e) return std::nullopt;
    return it->origin;
}

Augmentation build_degree3_tree(const Graph& g, const BackboneTree& u, const Ordering& l) {
    if (u.n() != g.n() || l.size() != g.n())
        throw std::invalid_argument("build_degree3_tree: size mismatch");
    if (g.n() == 0) throw std::invalid_argument("build_degree3_tree: empty graph");
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    return assemble(g, l, u.parent, {all});
}

Augmentation augment(const Graph& g, const Ordering& l) {
    if (g.n() == 0) throw std::invalid_argument("augment: empty graph");
    if (l.size() != g.n()) throw std::invalid_argument("augment: ordering size mismatch");

    ScanResult scan = backbone_scan(g, l);
    const auto components = connected_components(g);
    std::vector<int> roots;
    roots.reserve(components.size());
    for (const auto& comp : components)
        roots.push_back(scan.ds.class_min(comp.front()));  // L-minimum of the component
    const std::vector<int> parent = root_forest(g.n(), scan.edges, roots);
    return assemble(g, l, parent, components);
}

StructuralReport augmentation_structure(const Graph& g, const Augmentation& a) {
    StructuralReport report;
    const int n = g.n();
    const auto complain = [&report](const std::string& text) {
        report.violations.push_back(text);
    };

    if (a.n != n) {
        complain("vertex count mismatch between graph and augmentation");
        return report;
    }
    for (const auto& [u, v] : a.f) {
        if (u < 0 || v >= n) {
            complain("tree edge endpoint out of range");
            return report;
        }
    }

    // (a) spanning tree: n-1 edges forming one connected class
    DisjointSets ds(std::max(n, 1));
    int classes = n;
    for (const auto& [u, v] : a.f)
        if (ds.unite(u, v)) --classes;
    report.spanning_tree = static_cast<long long>(a.f.size()) == n - 1 && classes == 1;
    if (!report.spanning_tree)
        complain("F is not a spanning tree: " + std::to_string(a.f.size()) + " edges, " +
                 std::to_string(classes) + " components");
    if (static_cast<int>(a.chain_edges.size()) != std::max(a.component_count - 1, 0)) {
        report.spanning_tree = false;
        complain("chain edge count does not match component count");
    }

    // (b) maximum degree 3
    std::vector<long long> deg(n, 0);
    for (const auto& [u, v] : a.f) {
        ++deg[u];
        ++deg[v];
    }
    long long max_deg = 0;
    for (long long d : deg) max_deg = std::max(max_deg, d);
    report.degree_histogram.assign(static_cast<std::size_t>(std::max(max_deg + 1, 4LL)), 0);
    for (long long d : deg) ++report.degree_histogram[static_cast<std::size_t>(d)];
    report.max_degree_ok = max_deg <= 3;
    if (!report.max_degree_ok)
        complain("maximum T-degree is " + std::to_string(max_deg));

    // (c) every new edge: in F, absent from G, origin G-adjacent to both ends
    report.origins_ok = true;
    for (const auto& [e, origin] : a.f_new) {
        const auto fail = [&](const std::string& why) {
            report.origins_ok = false;
            complain("new edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                     ": " + why);
        };
        if (!a.f.contains(e.first, e.second)) fail("not in F");
        else if (g.has_edge(e.first, e.second)) fail("already an edge of G");
        else if (origin < 0 || origin >= n) fail("origin out of range");
        else if (!g.has_edge(origin, e.first) || !g.has_edge(origin, e.second))
            fail("origin not G-adjacent to both endpoints");
    }
    return report;
}

std::vector<std::string> VerifyReport::violations() const {
    std::vector<std::string> all = structure.violations;
    if (!bound.holds)
        all.push_back("admissibility bound violated: adm" + std::string(bound.adm_is_exact ? "" : " lower bound") +
                      " = " + std::to_string(bound.adm_value) + " exceeds " +
                      std::to_string(bound.bound));
    return all;
}

VerifyReport verify_augmentation(const Graph& g, const Ordering& l, const Augmentation& a,
                                 int r, std::uint64_t budget) {
    if (r < 0) throw std::invalid_argument("verify_augmentation: negative radius");
    VerifyReport report;
    report.structure = augmentation_structure(g, a);

    BoundReport& b = report.bound;
    b.r = r;
    b.connected_input = is_connected(g);
    b.col_2r = col(g, l, 2 * r).col_value;
    b.bound = b.connected_input ? 3LL * b.col_2r : 2LL + 3LL * b.col_2r;
    b.tight_bound = 2LL + 2LL * b.col_2r;

    if (a.n != g.n()) {  // cannot even form G+F; structure already complained
        b.holds = false;
        return report;
    }
    const Graph g_plus = g.add_edges(a.f);
    if (const auto exact = adm_graph(g_plus, l, r, budget)) {
        b.adm_value = *exact;
        b.adm_is_exact = true;
    } else {
        b.adm_value = adm_graph_greedy(g_plus, l, r);
        b.adm_is_exact = false;
    }
    b.margin = b.bound - b.adm_value;
    b.holds = b.adm_value <= b.bound;
    return report;
}

}  // namespace treespan
