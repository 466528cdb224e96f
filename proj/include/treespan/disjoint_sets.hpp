#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace treespan {

/// Union-find with path compression and union by size. Each class carries the
/// member that minimises a caller-supplied key (vertex id by default); the
/// elimination-tree and backbone scans use the ordering rank as key.
class DisjointSets {
public:
    explicit DisjointSets(int n) : DisjointSets(n, {}) {}

    /// `key[v]` must be unique per element when the class-minimum payload is
    /// consumed; empty key means key[v] = v.
    DisjointSets(int n, std::vector<int> key)
        : parent_(n), size_(n, 1), min_member_(n), key_(std::move(key)) {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::iota(min_member_.begin(), min_member_.end(), 0);
        if (!key_.empty() && static_cast<int>(key_.size()) != n)
            throw std::invalid_argument("DisjointSets: key size mismatch");
    }

    int find(int v) {
        check_range(v);
        ++ops_;
        int root = v;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[v] != root) {  // path compression
            int next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    /// Merges the classes of u and v; returns false if they already coincide.
    bool unite(int u, int v) {
        int ru = find(u);
        int rv = find(v);
        ++ops_;
        if (ru == rv) return false;
        if (size_[ru] < size_[rv]) std::swap(ru, rv);
        parent_[rv] = ru;
        size_[ru] += size_[rv];
        if (keyof(min_member_[rv]) < keyof(min_member_[ru]))
            min_member_[ru] = min_member_[rv];
        return true;
    }

    bool same(int u, int v) { return find(u) == find(v); }

    /// Member of v's class with the minimum key.
    int class_min(int v) { return min_member_[find(v)]; }

    int class_size(int v) { return size_[find(v)]; }
    int n() const { return static_cast<int>(parent_.size()); }

    /// Total find/unite calls, for the O(m) operation-count assertions.
    std::uint64_t operation_count() const { return ops_; }

private:
    int keyof(int v) const { return key_.empty() ? v : key_[v]; }

    void check_range(int v) const {
        if (v < 0 || v >= n()) throw std::out_of_range("DisjointSets: vertex out of range");
    }

    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> min_member_;
    std::vector<int> key_;
    std::uint64_t ops_ = 0;
};

}  // namespace treespan
