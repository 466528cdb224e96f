#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace treespan {

/// Linear vertex ordering: mutually inverse rank (vertex -> position) and
/// position (position -> vertex) arrays. Immutable after construction.
class Ordering {
public:
    Ordering() = default;

    static Ordering natural(int n);
    /// position[i] = vertex at position i; validated as a bijection.
    static Ordering from_positions(std::vector<int> position);
    static Ordering from_ranks(std::vector<int> rank);
    /// Deterministic shuffle of the natural ordering.
    static Ordering random(int n, std::uint64_t seed);

    int size() const { return static_cast<int>(rank_.size()); }
    int rank(int v) const { return rank_.at(v); }
    int vertex_at(int position) const { return position_.at(position); }
    const std::vector<int>& positions() const { return position_; }
    const std::vector<int>& ranks() const { return rank_; }

    /// u <_L v
    bool less(int u, int v) const { return rank_[u] < rank_[v]; }

    bool operator==(const Ordering& other) const { return position_ == other.position_; }

private:
    std::vector<int> rank_;
    std::vector<int> position_;
};

/// Ordering file: n lines, line i holds the vertex at position i ('#' comments
/// allowed). `n` is the expected vertex count.
Ordering parse_ordering(std::string_view text, int n);
Ordering load_ordering_file(const std::string& path, int n);
std::string write_ordering(const Ordering& ordering);

/// Draws uniformly from [0, bound) by rejection; fully reproducible across
/// platforms for a given generator state.
template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace treespan
