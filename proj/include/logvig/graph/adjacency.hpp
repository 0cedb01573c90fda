#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logvig::graph {

// Directed neighbor lists over an H x W pixel grid, row-major node indexing
// (node = r*W + c). Builders emit sorted, duplicate-free lists without
// self-loops; symmetry depends on the builder (KNN output is directed).
struct Adjacency {
    int height = 0;
    int width = 0;
    std::string kind;  // "lsgc" | "svga" | "lattice" | "knn" | ...
    int k = 0;         // expansion rate / neighbor count; 0 when not applicable
    std::vector<std::vector<int>> neighbors;

    int node_count() const { return height * width; }

    std::uint64_t directed_edge_count() const {
        std::uint64_t total = 0;
        for (const auto& list : neighbors) total += list.size();
        return total;
    }

    bool is_symmetric() const;
    // Self-loop-free, no duplicates, all indices in range, sorted lists.
    bool is_well_formed() const;
};

std::string to_json(const Adjacency& adj);
Adjacency adjacency_from_json(const std::string& text);

}  // namespace logvig::graph
