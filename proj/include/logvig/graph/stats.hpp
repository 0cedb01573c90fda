#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "logvig/graph/adjacency.hpp"

namespace logvig::graph {

inline constexpr int kUnreachable = -1;

struct DisconnectedGraphError : std::runtime_error {
    DisconnectedGraphError(int from, int to)
        : std::runtime_error("graph disconnected: node " + std::to_string(to) +
                             " unreachable from node " + std::to_string(from)),
          from_node(from),
          to_node(to) {}
    int from_node;
    int to_node;
};

enum class PairConvention {
    OrderedExcludingSelf,  // mean over ordered (i, j), i != j
    OrderedIncludingSelf,  // mean over all ordered (i, j); self pairs add zero
};

std::string to_string(PairConvention c);

struct PathReport {
    std::string kind;
    int resolution = 0;  // pixels per side
    double avg_shortest_path = 0.0;
    PairConvention pair_convention = PairConvention::OrderedExcludingSelf;
    int node_count = 0;
    std::uint64_t directed_edge_count = 0;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    double mean_degree = 0.0;
    std::uint64_t directed_edge_count = 0;
};

// Unweighted shortest-path distance from src to every node; kUnreachable
// marks nodes outside src's component. Throws on src out of range.
std::vector<int> bfs_distances(const Adjacency& adj, int src);

// Exact integer sum of d(i, j) over all ordered pairs. BFS sources may be
// split across threads; per-source sums are integers, so the reduction is
// order-independent and bit-identical to the sequential run. Throws
// DisconnectedGraphError naming an unreachable pair.
std::uint64_t apsp_distance_sum(const Adjacency& adj, int n_threads = 1);

double avg_shortest_path(const Adjacency& adj,
                         PairConvention convention = PairConvention::OrderedExcludingSelf,
                         int n_threads = 1);

// 2n/3: the exact mean lattice distance over ordered pairs i != j, which is
// what the reference table lists for the square lattice.
double lattice_closed_form(int n);

// 2(n^2-1)/(3n): the same mean with self pairs kept in the denominator.
double lattice_mean_including_self(int n);

DegreeStats degree_stats(const Adjacency& adj);

PathReport make_path_report(const Adjacency& adj, int resolution,
                            PairConvention convention = PairConvention::OrderedExcludingSelf,
                            int n_threads = 1);

struct BenchRow {
    std::string kind;
    int resolution = 0;
    double build_ms = 0.0;  // median over trials
    std::uint64_t directed_edge_count = 0;
};

// Builds each (kind, resolution) `trials` times and reports the median
// wall-clock build time. KNN runs over seeded random features (dim 16).
std::vector<BenchRow> construction_bench(const std::vector<int>& resolutions,
                                         const std::vector<std::string>& kinds,
                                         int k, int knn_k, int trials,
                                         std::uint64_t seed = 0);

}  // namespace logvig::graph
