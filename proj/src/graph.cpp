#include "treespan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace treespan {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("EdgeSet: self-pair " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

void EdgeSet::add(int u, int v) {
    if (u == v) throw std::invalid_argument("EdgeSet: self-pair " + std::to_string(u));
    const Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool EdgeSet::contains(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("Graph: edge endpoint outside [0, n)");
        if (u == v) {
            g.had_self_loops_ = true;
            continue;
        }
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    long long half_degrees = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        const auto last = std::unique(nbrs.begin(), nbrs.end());
        if (last != nbrs.end()) {
            g.had_duplicates_ = true;
            nbrs.erase(last, nbrs.end());
        }
        half_degrees += static_cast<long long>(nbrs.size());
    }
    g.m_ = half_degrees / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = degree(u) <= degree(v) ? adj_[u] : adj_[v];
    const int target = degree(u) <= degree(v) ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already sorted: u ascending, then v ascending
}

Graph Graph::add_edges(const EdgeSet& extra) const {
    std::vector<Edge> all = edges();
    all.insert(all.end(), extra.begin(), extra.end());
    return from_edges(n_, all);
}

void Graph::check_invariants() const {
    long long half_degrees = 0;
    for (int u = 0; u < n_; ++u) {
        const auto& nbrs = adj_[u];
        half_degrees += static_cast<long long>(nbrs.size());
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const int v = nbrs[i];
            if (v == u) throw std::logic_error("Graph invariant: self-loop at " + std::to_string(u));
            if (v < 0 || v >= n_) throw std::logic_error("Graph invariant: neighbour out of range");
            if (i > 0 && nbrs[i - 1] >= v)
                throw std::logic_error("Graph invariant: adjacency not sorted unique at " +
                                       std::to_string(u));
            if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u))
                throw std::logic_error("Graph invariant: asymmetric edge " + std::to_string(u) +
                                       "-" + std::to_string(v));
        }
    }
    if (half_degrees != 2 * m_) throw std::logic_error("Graph invariant: edge count mismatch");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> parts;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        queue.assign(1, s);
        seen[s] = 1;
        std::vector<int> part;
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            part.push_back(u);
            for (int v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;  // scanning seeds ascending orders parts by minimum id
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int visited = 0;
    while (!queue.empty()) {
        const int u = queue.back();
        queue.pop_back();
        ++visited;
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return visited == g.n();
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    InducedSubgraph out;
    out.old_id = vertices;
    std::sort(out.old_id.begin(), out.old_id.end());
    std::vector<int> new_id(g.n(), -1);
    for (std::size_t i = 0; i < out.old_id.size(); ++i) {
        const int v = out.old_id[i];
        if (v < 0 || v >= g.n()) throw std::out_of_range("induced_subgraph: vertex out of range");
        if (new_id[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        new_id[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (int u : out.old_id)
        for (int v : g.neighbors(u))
            if (u < v && new_id[v] != -1) edges.emplace_back(new_id[u], new_id[v]);
    out.graph = Graph::from_edges(static_cast<int>(out.old_id.size()), edges);
    return out;
}

namespace {

// Splits text into lines, strips `comment_char` comments and surrounding
// whitespace, and reports each surviving line with its 1-based number.
std::vector<std::pair<int, std::string>> significant_lines(std::string_view text,
                                                           char comment_char) {
    std::vector<std::pair<int, std::string>> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++line_no;
        if (const auto hash = line.find(comment_char); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos) {
            const auto last = line.find_last_not_of(" \t\r");
            lines.emplace_back(line_no, std::string(line.substr(first, last - first + 1)));
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
    std::vector<long long> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw parse_error("expected integer, got '" + token + "'", line_no);
        out.push_back(value);
    }
    return out;
}

int checked_vertex(long long v, int n, int line_no) {
    if (v < 0 || v >= n)
        throw parse_error("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")",
                          line_no);
    return static_cast<int>(v);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    const auto lines = significant_lines(text, '#');
    if (lines.empty()) throw parse_error("empty input, expected 'n m' header", 1);

    const auto header = parse_ints(lines[0].second, lines[0].first);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw parse_error("expected header 'n m'", lines[0].first);
    const int n = static_cast<int>(header[0]);
    const long long m = header[1];

    const long long edge_lines = static_cast<long long>(lines.size()) - 1;
    if (edge_lines != m) {
        // Point at the first surplus line, or the last line when short.
        const auto& at = edge_lines > m ? lines[static_cast<std::size_t>(m) + 1] : lines.back();
        throw parse_error("expected " + std::to_string(m) + " edge lines, found " +
                              std::to_string(edge_lines),
                          at.first);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [line_no, line] = lines[i];
        const auto ints = parse_ints(line, line_no);
        if (ints.size() != 2) throw parse_error("expected edge line 'u v'", line_no);
        edges.emplace_back(checked_vertex(ints[0], n, line_no), checked_vertex(ints[1], n, line_no));
    }
    Graph g = Graph::from_edges(n, edges);
    g.check_invariants();
    return g;
}

Graph parse_dimacs(std::string_view text) {
    const auto lines = significant_lines(text, 'c');
    int n = -1;
    long long m = -1;
    long long seen_edges = 0;
    std::vector<Edge> edges;
    for (const auto& [line_no, line] : lines) {
        if (line[0] == 'p') {
            if (n != -1) throw parse_error("duplicate problem line", line_no);
            std::istringstream in(line);
            std::string p, kind;
            long long nn = -1, mm = -1;
            in >> p >> kind >> nn >> mm;
            if (in.fail() || (kind != "tw" && kind != "edge") || nn < 0 || mm < 0)
                throw parse_error("expected 'p tw n m' or 'p edge n m'", line_no);
            n = static_cast<int>(nn);
            m = mm;
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        std::string body = line;
        if (body[0] == 'e') {
            body = body.substr(1);
        } else if (!(body[0] == '-' || (body[0] >= '0' && body[0] <= '9'))) {
            throw parse_error("unrecognised line '" + line + "'", line_no);
        }
        if (n == -1) throw parse_error("edge before problem line", line_no);
        const auto ints = parse_ints(body, line_no);
        if (ints.size() != 2) throw parse_error("expected edge line 'e u v'", line_no);
        // 1-based labels; shifting to 0-based is the whole remap table.
        edges.emplace_back(checked_vertex(ints[0] - 1, n, line_no),
                           checked_vertex(ints[1] - 1, n, line_no));
        ++seen_edges;
    }
    if (n == -1) throw parse_error("missing problem line", 1);
    if (seen_edges != m)
        throw parse_error("expected " + std::to_string(m) + " edge lines, found " +
                              std::to_string(seen_edges),
                          lines.back().first);
    Graph g = Graph::from_edges(n, edges);
    g.check_invariants();
    return g;
}

Graph parse_graph_auto(std::string_view text) {
    // '#' comments only exist in edge lists, so the first raw non-blank byte
    // decides: 'c'/'p'/'e' opens a DIMACS file, anything else an edge list.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos) {
        const char c = text[first];
        if (c == 'c' || c == 'p' || c == 'e') return parse_dimacs(text);
    }
    return parse_edge_list(text);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_auto(buffer.str());
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace treespan
