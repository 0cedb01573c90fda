#include "logvig/graph/adjacency.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <json.hpp>

namespace logvig::graph {

bool Adjacency::is_symmetric() const {
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < node_count(); ++i)
        for (int j : neighbors[i]) edges.emplace(i, j);
    for (const auto& [i, j] : edges)
        if (!edges.count({j, i})) return false;
    return true;
}

bool Adjacency::is_well_formed() const {
    const int n = node_count();
    if (neighbors.size() != static_cast<std::size_t>(n)) return false;
    for (int i = 0; i < n; ++i) {
        const auto& list = neighbors[i];
        if (!std::is_sorted(list.begin(), list.end())) return false;
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) return false;
        for (int j : list)
            if (j == i || j < 0 || j >= n) return false;
    }
    return true;
}

std::string to_json(const Adjacency& adj) {
    nlohmann::json j;
    j["height"] = adj.height;
    j["width"] = adj.width;
    j["kind"] = adj.kind;
    j["k"] = adj.k;
    j["neighbors"] = adj.neighbors;
    return j.dump();
}

Adjacency adjacency_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Adjacency adj;
    adj.height = j.at("height").get<int>();
    adj.width = j.at("width").get<int>();
    adj.kind = j.at("kind").get<std::string>();
    adj.k = j.at("k").get<int>();
    adj.neighbors = j.at("neighbors").get<std::vector<std::vector<int>>>();
    return adj;
}

}  // namespace logvig::graph
