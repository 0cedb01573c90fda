#include "logvig/graph/builders.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace logvig::graph {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void sort_dedup(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

Adjacency make_empty(int height, int width, std::string kind, int k) {
    Adjacency adj;
    adj.height = height;
    adj.width = width;
    adj.kind = std::move(kind);
    adj.k = k;
    adj.neighbors.resize(static_cast<std::size_t>(height) * width);
    return adj;
}

}  // namespace

LsgcConfig::LsgcConfig(int h, int w, int k)
    : height(h), width(w), expansion_rate(k), height_bits(0), width_bits(0) {
    require(h >= 1 && w >= 1, "LsgcConfig: H and W must be >= 1");
    require(k >= 2, "LsgcConfig: expansion rate K must be >= 2");
    height_bits = bit_depth(h);
    width_bits = bit_depth(w);
}

int bit_depth(std::int64_t n) {
    require(n >= 1, "bit_depth: n must be positive");
    int b = 0;
    while (n > 0) {
        n >>= 1;
        ++b;
    }
    return b;
}

std::vector<std::int64_t> lsgc_offsets(int dim, int k) {
    require(dim >= 1, "lsgc_offsets: dim must be >= 1");
    require(k >= 2, "lsgc_offsets: K must be >= 2");
    const int bits = bit_depth(dim);
    std::vector<std::int64_t> out;
    out.reserve(bits);
    std::int64_t power = 1;
    for (int i = 1; i <= bits; ++i) {
        if (power > std::numeric_limits<std::int64_t>::max() / k)
            throw std::overflow_error("lsgc_offsets: K^i overflows int64");
        power *= k;
        out.push_back(power - 1);
    }
    return out;
}

std::vector<int> effective_offsets(int dim, int k) {
    require(dim >= 1, "effective_offsets: dim must be >= 1");
    require(k >= 2, "effective_offsets: K must be >= 2");
    const int bits = bit_depth(dim);
    std::set<int> residues;
    // Track K^i mod dim incrementally; the raw distance is never materialized
    // so arbitrarily large K cannot overflow here.
    std::int64_t power_mod = 1;
    for (int i = 1; i <= bits; ++i) {
        power_mod = (power_mod * k) % dim;
        int fwd = static_cast<int>(((power_mod - 1) % dim + dim) % dim);
        if (fwd != 0) {
            residues.insert(fwd);
            residues.insert(dim - fwd);
        }
    }
    return {residues.begin(), residues.end()};
}

std::vector<int> svga_strides(int dim, int k) {
    require(dim >= 1, "svga_strides: dim must be >= 1");
    require(k >= 1, "svga_strides: K must be >= 1");
    std::vector<int> out;
    for (int d = k; d < dim; d += k) out.push_back(d);
    return out;
}

Adjacency build_lsgc_adjacency(int height, int width, int k) {
    LsgcConfig cfg(height, width, k);
    Adjacency adj = make_empty(height, width, "lsgc", k);
    const auto row_offs = effective_offsets(height, k);
    const auto col_offs = effective_offsets(width, k);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            auto& list = adj.neighbors[static_cast<std::size_t>(r) * width + c];
            for (int d : row_offs) list.push_back(((r + d) % height) * width + c);
            for (int d : col_offs) list.push_back(r * width + (c + d) % width);
            sort_dedup(list);
        }
    }
    return adj;
}

Adjacency build_svga_adjacency(int height, int width, int k) {
    require(height >= 1 && width >= 1, "build_svga_adjacency: H and W must be >= 1");
    require(k >= 1, "build_svga_adjacency: K must be >= 1");
    Adjacency adj = make_empty(height, width, "svga", k);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            auto& list = adj.neighbors[static_cast<std::size_t>(r) * width + c];
            for (int c2 = c % k; c2 < width; c2 += k)
                if (c2 != c) list.push_back(r * width + c2);
            for (int r2 = r % k; r2 < height; r2 += k)
                if (r2 != r) list.push_back(r2 * width + c);
            sort_dedup(list);
        }
    }
    return adj;
}

Adjacency build_svga_path_adjacency(int height, int width, int k) {
    require(height >= 1 && width >= 1, "build_svga_path_adjacency: H and W must be >= 1");
    require(k >= 1, "build_svga_path_adjacency: K must be >= 1");
    Adjacency adj = make_empty(height, width, "svga", k);
    const auto row_strides = svga_strides(height, k);
    const auto col_strides = svga_strides(width, k);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const int self = r * width + c;
            auto& list = adj.neighbors[static_cast<std::size_t>(r) * width + c];
            for (int d : row_strides) {
                list.push_back(((r + d) % height) * width + c);
                list.push_back(((r - d + height) % height) * width + c);
            }
            for (int d : col_strides) {
                list.push_back(r * width + (c + d) % width);
                list.push_back(r * width + (c - d + width) % width);
            }
            if (r + 1 < height) list.push_back((r + 1) * width + c);
            if (r - 1 >= 0) list.push_back((r - 1) * width + c);
            if (c + 1 < width) list.push_back(self + 1);
            if (c - 1 >= 0) list.push_back(self - 1);
            list.erase(std::remove(list.begin(), list.end(), self), list.end());
            sort_dedup(list);
        }
    }
    return adj;
}

Adjacency build_lattice_adjacency(int height, int width) {
    require(height >= 1 && width >= 1, "build_lattice_adjacency: H and W must be >= 1");
    Adjacency adj = make_empty(height, width, "lattice", 0);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            auto& list = adj.neighbors[static_cast<std::size_t>(r) * width + c];
            if (r - 1 >= 0) list.push_back((r - 1) * width + c);
            if (c - 1 >= 0) list.push_back(r * width + c - 1);
            if (c + 1 < width) list.push_back(r * width + c + 1);
            if (r + 1 < height) list.push_back((r + 1) * width + c);
            std::sort(list.begin(), list.end());
        }
    }
    return adj;
}

Adjacency build_knn_adjacency(const std::vector<double>& features, int n_nodes,
                              int dim, int k) {
    require(n_nodes >= 2 && dim >= 1, "build_knn_adjacency: need >= 2 nodes, dim >= 1");
    require(features.size() == static_cast<std::size_t>(n_nodes) * dim,
            "build_knn_adjacency: features size mismatch");
    require(k >= 1 && k < n_nodes, "build_knn_adjacency: need 1 <= k < n_nodes");
    Adjacency adj;
    adj.height = 1;
    adj.width = n_nodes;
    adj.kind = "knn";
    adj.k = k;
    adj.neighbors.resize(n_nodes);

    std::vector<std::pair<double, int>> cand(n_nodes - 1);
    for (int i = 0; i < n_nodes; ++i) {
        const double* fi = features.data() + static_cast<std::size_t>(i) * dim;
        int m = 0;
        for (int j = 0; j < n_nodes; ++j) {
            if (j == i) continue;
            const double* fj = features.data() + static_cast<std::size_t>(j) * dim;
            double d2 = 0.0;
            for (int t = 0; t < dim; ++t) {
                const double diff = fi[t] - fj[t];
                d2 += diff * diff;
            }
            cand[m++] = {d2, j};
        }
        // (distance, index) order makes the tie rule "lower index wins" exact.
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
        auto& list = adj.neighbors[i];
        list.resize(k);
        for (int t = 0; t < k; ++t) list[t] = cand[t].second;
        std::sort(list.begin(), list.end());
    }
    return adj;
}

}  // namespace logvig::graph
