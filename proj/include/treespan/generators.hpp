#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// Deterministic instance descriptor: same family + params + seed always
/// yields the identical graph.
struct GeneratorSpec {
    std::string family;              // grid, torus, random_gnm, random_regular,
                                     // star, path, clique, figure1
    std::vector<long long> params;   // family-specific, see generate()
    std::uint64_t seed = 0;

    /// Compact label such as "grid_3x3" or "random_gnm_100_200_s7".
    std::string name() const;
};

/// Dispatch on spec.family; params are
///   grid R C | torus R C | random_gnm N M | random_regular N D |
///   star N | path N | clique N | figure1 (none).
/// Throws std::invalid_argument on unknown family or bad parameters.
Graph generate(const GeneratorSpec& spec);

Graph make_grid(int rows, int cols);
Graph make_torus(int rows, int cols);
/// m distinct edges sampled uniformly without replacement.
Graph make_random_gnm(int n, long long m, std::uint64_t seed);
/// Configuration-model pairing, resampled until simple; n*d must be even.
Graph make_random_regular(int n, int d, std::uint64_t seed);
/// n vertices: centre 0 and leaves 1..n-1.
Graph make_star(int n);
Graph make_path(int n);
Graph make_clique(int n);
/// The fixed 23-vertex, 24-edge worked example whose vertex ids spell out the
/// intended ordering (natural order on ids).
Graph make_figure1();

}  // namespace treespan
