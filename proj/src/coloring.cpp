#include "treespan/coloring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace treespan {

namespace {

// Epoch-stamped BFS workspace so per-vertex scans over a large graph avoid
// O(n) clearing between calls.
struct BfsScratch {
    std::vector<int> stamp;
    std::vector<int> dist;
    std::vector<int> queue;
    int epoch = 0;

    void ensure(int n) {
        if (static_cast<int>(stamp.size()) < n) {
            stamp.assign(n, 0);
            dist.assign(n, 0);
        }
    }
};

// Appends SReach_r[G,L,v] \ {v} to `out` (unsorted): breadth-first search of
// depth r in which only vertices >_L v are expanded and vertices <_L v are
// collected as endpoints.
void sreach_tail(const Graph& g, const Ordering& l, int v, int r, BfsScratch& ws,
                 std::vector<int>& out) {
    if (r <= 0) return;
    ws.ensure(g.n());
    const int epoch = ++ws.epoch;
    const int rv = l.rank(v);
    ws.stamp[v] = epoch;
    ws.dist[v] = 0;
    ws.queue.clear();
    ws.queue.push_back(v);
    for (std::size_t head = 0; head < ws.queue.size(); ++head) {
        const int x = ws.queue[head];
        const int d = ws.dist[x];
        for (int y : g.neighbors(x)) {
            if (ws.stamp[y] == epoch) continue;
            if (l.rank(y) < rv) {  // endpoint: collect, never expand
                ws.stamp[y] = epoch;
                out.push_back(y);
            } else if (d + 1 <= r - 1) {  // internal vertex needs one more edge to finish
                ws.stamp[y] = epoch;
                ws.dist[y] = d + 1;
                ws.queue.push_back(y);
            }
        }
    }
}

}  // namespace

std::vector<int> sreach(const Graph& g, const Ordering& l, int v, int r) {
    if (r < 0) throw std::invalid_argument("sreach: negative radius");
    BfsScratch ws;
    std::vector<int> out{v};
    sreach_tail(g, l, v, r, ws, out);
    std::sort(out.begin(), out.end());
    return out;
}

ColProfile col(const Graph& g, const Ordering& l, int r) {
    if (r < 0) throw std::invalid_argument("col: negative radius");
    ColProfile profile;
    profile.r = r;
    profile.sreach_size.assign(g.n(), 1);
    BfsScratch ws;
    std::vector<int> tail;
    for (int v = 0; v < g.n(); ++v) {
        tail.clear();
        sreach_tail(g, l, v, r, ws, tail);
        const int size = 1 + static_cast<int>(tail.size());
        profile.sreach_size[v] = size;
        if (size > profile.col_value) {  // ties keep the lowest vertex id
            profile.col_value = size;
            profile.argmax_vertex = v;
        }
    }
    if (g.n() == 0) profile.col_value = 0;
    return profile;
}

bool path_family_valid(const Graph& g, const Ordering& l, const PathFamily& family,
                       std::string* reason) {
    const auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    const int v = family.start;
    if (v < 0 || v >= g.n()) return fail("start vertex out of range");
    std::vector<char> used(g.n(), 0);
    for (const auto& path : family.paths) {
        if (path.size() < 2) return fail("path shorter than one edge");
        if (static_cast<int>(path.size()) - 1 > family.r) return fail("path longer than r");
        if (path.front() != v) return fail("path does not start at the family start");
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1])) return fail("path uses a non-edge");
        if (l.rank(path.back()) >= l.rank(v)) return fail("endpoint not below start");
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (l.rank(path[i]) <= l.rank(v)) return fail("internal vertex not above start");
        for (std::size_t i = 1; i < path.size(); ++i) {
            if (used[path[i]]) return fail("vertex shared between paths or repeated");
            used[path[i]] = 1;  // marks persist across paths: only v may be shared
        }
    }
    return true;
}

namespace {

// All simple paths from v of length <= r that end <_L v and stay >_L v
// internally, each recorded as the full vertex sequence. Every examined
// extension costs one budget unit; returns false when the budget runs out.
bool enumerate_paths(const Graph& g, const Ordering& l, int v, int r, std::uint64_t& budget,
                     std::vector<std::vector<int>>& out) {
    const int rv = l.rank(v);
    std::vector<int> path{v};
    std::vector<char> on_path(g.n(), 0);
    on_path[v] = 1;

    std::function<bool(int, int)> extend = [&](int x, int len) -> bool {
        for (int y : g.neighbors(x)) {
            if (budget == 0) return false;
            --budget;
            if (l.rank(y) < rv) {
                if (len + 1 <= r) {
                    path.push_back(y);
                    out.push_back(path);
                    path.pop_back();
                }
            } else if (y != v && !on_path[y] && len + 1 <= r - 1) {
                path.push_back(y);
                on_path[y] = 1;
                if (!extend(y, len + 1)) return false;
                on_path[y] = 0;
                path.pop_back();
            }
        }
        return true;
    };
    if (r < 1) return true;
    return extend(v, 0);
}

// Branch-and-bound maximum packing of vertex-disjoint-except-start paths.
// Paths are tried in (length, lexicographic) order; each visited node costs
// one budget unit.
struct PathPacker {
    const std::vector<std::vector<int>>& paths;
    std::vector<char> used;          // vertices claimed by the current selection
    std::vector<int> chosen;         // indices into paths
    std::vector<int> best_choice;
    int best = -1;
    int hard_cap = 0;                // min(deg(v), distinct endpoints): search stops here
    std::vector<int> ub_suffix;      // upper bound on paths addable from index i on
    std::uint64_t& budget;
    bool aborted = false;

    PathPacker(const std::vector<std::vector<int>>& p, int n, int cap, std::uint64_t& b)
        : paths(p), used(n, 0), hard_cap(cap), budget(b) {
        // Distinct endpoints and distinct first-steps both bound the number of
        // pairwise compatible paths in any suffix.
        const int k = static_cast<int>(paths.size());
        ub_suffix.assign(k + 1, 0);
        std::vector<char> end_seen(n, 0), sec_seen(n, 0);
        int ends = 0, secs = 0;
        for (int i = k - 1; i >= 0; --i) {
            if (!end_seen[paths[i].back()]) { end_seen[paths[i].back()] = 1; ++ends; }
            if (!sec_seen[paths[i][1]]) { sec_seen[paths[i][1]] = 1; ++secs; }
            ub_suffix[i] = std::min(ends, secs);
        }
    }

    bool compatible(const std::vector<int>& path) const {
        for (std::size_t i = 1; i < path.size(); ++i)
            if (used[path[i]]) return false;
        return true;
    }

    void mark(const std::vector<int>& path, char value) {
        for (std::size_t i = 1; i < path.size(); ++i) used[path[i]] = value;
    }

    void search(int i, int count) {
        if (aborted) return;
        if (budget == 0) { aborted = true; return; }
        --budget;
        if (count > best) {
            best = count;
            best_choice = chosen;
        }
        if (best >= hard_cap) return;
        if (i >= static_cast<int>(paths.size())) return;
        if (count + ub_suffix[i] <= best) return;  // cannot strictly improve
        if (compatible(paths[i])) {
            mark(paths[i], 1);
            chosen.push_back(i);
            search(i + 1, count + 1);
            chosen.pop_back();
            mark(paths[i], 0);
        }
        if (aborted) return;
        search(i + 1, count);
    }
};

}  // namespace

std::optional<AdmCertificate> adm_exact(const Graph& g, const Ordering& l, int v, int r,
                                        std::uint64_t budget) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("adm_exact: vertex out of range");
    if (r < 0) throw std::invalid_argument("adm_exact: negative radius");

    std::vector<std::vector<int>> paths;
    if (!enumerate_paths(g, l, v, r, budget, paths)) return std::nullopt;
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::vector<char> end_seen(g.n(), 0);
    int distinct_ends = 0;
    for (const auto& p : paths)
        if (!end_seen[p.back()]) { end_seen[p.back()] = 1; ++distinct_ends; }
    const int cap = std::min(g.degree(v), distinct_ends);

    PathPacker packer(paths, g.n(), cap, budget);
    packer.search(0, 0);
    if (packer.aborted) return std::nullopt;

    AdmCertificate cert;
    cert.value = packer.best;
    cert.family.start = v;
    cert.family.r = r;
    for (int i : packer.best_choice) cert.family.paths.push_back(paths[i]);
    return cert;
}

std::optional<int> adm_graph(const Graph& g, const Ordering& l, int r, std::uint64_t budget) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        const auto cert = adm_exact(g, l, v, r, budget);
        if (!cert) return std::nullopt;
        best = std::max(best, cert->value);
    }
    return best;
}

AdmCertificate adm_greedy_lower(const Graph& g, const Ordering& l, int v, int r) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("adm_greedy_lower: vertex out of range");
    AdmCertificate cert;
    cert.family.start = v;
    cert.family.r = r;
    if (r < 1) return cert;

    const int rv = l.rank(v);
    std::vector<char> blocked(g.n(), 0);
    std::vector<int> parent(g.n(), -1);
    std::vector<int> dist(g.n(), -1);
    std::vector<int> queue;
    std::vector<int> touched;

    while (true) {
        // Shortest valid path in the residual graph: BFS over unblocked
        // vertices >_L v; the first layer holding endpoints wins, and the
        // lowest endpoint id breaks ties.
        queue.assign(1, v);
        touched.assign(1, v);
        dist[v] = 0;
        int found_end = -1;
        int found_dist = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            const int d = dist[x];
            if (found_dist != -1 && d + 1 > found_dist) break;
            for (int y : g.neighbors(x)) {
                if (blocked[y] || dist[y] != -1) continue;
                if (l.rank(y) < rv) {
                    if (d + 1 <= r && (found_dist == -1 || y < found_end)) {
                        found_end = y;
                        found_dist = d + 1;
                        parent[y] = x;
                    }
                } else if (y != v && d + 1 <= r - 1) {
                    dist[y] = d + 1;
                    parent[y] = x;
                    touched.push_back(y);
                    queue.push_back(y);
                }
            }
        }
        if (found_end == -1) {
            for (int t : touched) dist[t] = -1;
            break;
        }
        std::vector<int> path;
        for (int x = found_end; x != -1; x = x == v ? -1 : parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        for (std::size_t i = 1; i < path.size(); ++i) blocked[path[i]] = 1;
        cert.family.paths.push_back(std::move(path));
        for (int t : touched) dist[t] = -1;
    }
    cert.value = cert.family.value();
    return cert;
}

int adm_graph_greedy(const Graph& g, const Ordering& l, int r) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v)
        best = std::max(best, adm_greedy_lower(g, l, v, r).value);
    return best;
}

Ordering degeneracy_ordering(const Graph& g) {
    const int n = g.n();
    std::vector<int> deg(n);
    using Entry = std::pair<int, int>;  // (current degree, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    std::vector<int> position(n);
    for (int filled = n - 1; filled >= 0;) {  // removed first -> large end
        const auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != deg[v]) continue;  // stale heap entry
        removed[v] = 1;
        position[filled--] = v;
        for (int w : g.neighbors(v)) {
            if (!removed[w]) heap.emplace(--deg[w], w);
        }
    }
    return Ordering::from_positions(std::move(position));
}

BestOrdering best_ordering_bruteforce(const Graph& g, int r) {
    if (g.n() > 9) throw std::invalid_argument("best_ordering_bruteforce: n > 9 refused");
    if (g.n() == 0) return {Ordering::natural(0), 0};
    std::vector<int> position(g.n());
    std::iota(position.begin(), position.end(), 0);
    BestOrdering best{Ordering::from_positions(position), -1};
    constexpr std::uint64_t kAmpleBudget = 1'000'000'000'000ULL;
    do {
        const Ordering l = Ordering::from_positions(position);
        const int value = adm_graph(g, l, r, kAmpleBudget).value();  // n <= 9 never exhausts
        if (best.value == -1 || value < best.value) {
            best.value = value;
            best.ordering = l;
        }
    } while (std::next_permutation(position.begin(), position.end()));
    return best;
}

}  // namespace treespan
