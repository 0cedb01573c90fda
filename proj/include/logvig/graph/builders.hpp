#pragma once

#include <cstdint>
#include <vector>

#include "logvig/graph/adjacency.hpp"

namespace logvig::graph {

// Image dims plus the derived per-axis bit-depths and the expansion rate.
struct LsgcConfig {
    int height;
    int width;
    int expansion_rate;
    int height_bits;
    int width_bits;

    // Validates H,W >= 1 and K >= 2, computes bit-depths.
    LsgcConfig(int h, int w, int k);
};

// Smallest b with n < 2^b, i.e. floor(log2 n) + 1. Throws on n <= 0.
int bit_depth(std::int64_t n);

// Raw expansion distances K^i - 1 for i = 1..bit_depth(dim), unreduced.
// Throws std::overflow_error if a distance exceeds the int64 range.
std::vector<std::int64_t> lsgc_offsets(int dim, int k);

// Distances folded onto the ring [1, dim): union of +/-(K^i - 1) mod dim
// with the zero residue removed; sorted ascending.
std::vector<int> effective_offsets(int dim, int k);

// Per-axis strides of the static grapher: {k, 2k, ...} below dim, one axis.
std::vector<int> svga_strides(int dim, int k);

Adjacency build_lsgc_adjacency(int height, int width, int k);

// Residue-class pattern: (r,c) ~ (r,c') for c' == c (mod k), and likewise on
// rows. No wrap; equals the reach of non-wrapping +/-(m*k) shifts. For k >= 2
// the residue classes never mix, so the graph is disconnected.
Adjacency build_svga_adjacency(int height, int width, int k);

// Wrap-around realization of the same strides (circular shifts by m*k) plus
// the 4-neighbor lattice that the surrounding convolutions always provide.
// This is the connectivity the tabulated path-length statistics describe.
Adjacency build_svga_path_adjacency(int height, int width, int k);

// 4-neighbor grid, no wrap.
Adjacency build_lattice_adjacency(int height, int width);

// Brute-force k-nearest-neighbors by squared Euclidean distance, self
// excluded, ties broken toward the lower node index. Directed. `features`
// is n_nodes x dim, row-major.
Adjacency build_knn_adjacency(const std::vector<double>& features, int n_nodes,
                              int dim, int k);

}  // namespace logvig::graph
