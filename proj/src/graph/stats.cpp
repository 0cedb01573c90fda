#include "logvig/graph/stats.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

#include "logvig/graph/builders.hpp"
#include "logvig/rng.hpp"

namespace logvig::graph {

std::string to_string(PairConvention c) {
    return c == PairConvention::OrderedExcludingSelf ? "ordered-pairs-excluding-self"
                                                     : "ordered-pairs-including-self";
}

std::vector<int> bfs_distances(const Adjacency& adj, int src) {
    const int n = adj.node_count();
    if (src < 0 || src >= n) throw std::invalid_argument("bfs_distances: src out of range");
    std::vector<int> dist(n, kUnreachable);
    std::vector<int> frontier;
    frontier.reserve(n);
    dist[src] = 0;
    frontier.push_back(src);
    // Level-by-level scan; a deque buys nothing for unweighted BFS.
    std::vector<int> next;
    next.reserve(n);
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (int u : frontier) {
            for (int v : adj.neighbors[u]) {
                if (dist[v] == kUnreachable) {
                    dist[v] = level;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

namespace {

// Per-source distance sum; reports the first unreachable node via `bad`.
std::uint64_t source_sum(const Adjacency& adj, int src, int& bad) {
    const auto dist = bfs_distances(adj, src);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] == kUnreachable) {
            bad = static_cast<int>(i);
            return 0;
        }
        sum += static_cast<std::uint64_t>(dist[i]);
    }
    bad = -1;
    return sum;
}

}  // namespace

std::uint64_t apsp_distance_sum(const Adjacency& adj, int n_threads) {
    const int n = adj.node_count();
    if (n == 0) return 0;
    n_threads = std::clamp(n_threads, 1, n);

    std::vector<std::uint64_t> partial(n_threads, 0);
    std::vector<std::pair<int, int>> failure(n_threads, {-1, -1});

    auto work = [&](int t) {
        std::uint64_t local = 0;
        for (int src = t; src < n; src += n_threads) {
            int bad = -1;
            local += source_sum(adj, src, bad);
            if (bad != -1) {
                failure[t] = {src, bad};
                return;
            }
        }
        partial[t] = local;
    };

    if (n_threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    for (const auto& [from, to] : failure)
        if (from != -1) throw DisconnectedGraphError(from, to);
    // Fixed reduction order over thread index.
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

double avg_shortest_path(const Adjacency& adj, PairConvention convention, int n_threads) {
    const std::uint64_t n = static_cast<std::uint64_t>(adj.node_count());
    if (n == 0) throw std::invalid_argument("avg_shortest_path: empty graph");
    if (n == 1) return 0.0;
    const std::uint64_t sum = apsp_distance_sum(adj, n_threads);
    const std::uint64_t pairs =
        convention == PairConvention::OrderedExcludingSelf ? n * (n - 1) : n * n;
    return static_cast<double>(sum) / static_cast<double>(pairs);
}

double lattice_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("lattice_closed_form: n must be >= 1");
    return 2.0 * n / 3.0;
}

double lattice_mean_including_self(int n) {
    if (n < 1) throw std::invalid_argument("lattice_mean_including_self: n must be >= 1");
    return 2.0 * (static_cast<double>(n) * n - 1.0) / (3.0 * n);
}

DegreeStats degree_stats(const Adjacency& adj) {
    DegreeStats s;
    if (adj.neighbors.empty()) return s;
    s.min_degree = static_cast<int>(adj.neighbors.front().size());
    for (const auto& list : adj.neighbors) {
        const int d = static_cast<int>(list.size());
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        s.directed_edge_count += static_cast<std::uint64_t>(d);
    }
    s.mean_degree = static_cast<double>(s.directed_edge_count) /
                    static_cast<double>(adj.neighbors.size());
    return s;
}

PathReport make_path_report(const Adjacency& adj, int resolution,
                            PairConvention convention, int n_threads) {
    PathReport r;
    r.kind = adj.kind;
    r.resolution = resolution;
    r.pair_convention = convention;
    r.node_count = adj.node_count();
    r.directed_edge_count = adj.directed_edge_count();
    r.avg_shortest_path = avg_shortest_path(adj, convention, n_threads);
    return r;
}

std::vector<BenchRow> construction_bench(const std::vector<int>& resolutions,
                                         const std::vector<std::string>& kinds,
                                         int k, int knn_k, int trials,
                                         std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("construction_bench: trials must be >= 1");
    using clock = std::chrono::steady_clock;
    constexpr int kFeatureDim = 16;

    std::vector<BenchRow> rows;
    for (const auto& kind : kinds) {
        for (int n : resolutions) {
            std::vector<double> times;
            times.reserve(trials);
            std::uint64_t edges = 0;
            // Feature generation stays outside the timed region.
            std::vector<double> features;
            if (kind == "knn") {
                Rng rng(seed);
                features.resize(static_cast<std::size_t>(n) * n * kFeatureDim);
                for (auto& f : features) f = rng.normal();
            }
            for (int t = 0; t < trials; ++t) {
                const auto start = clock::now();
                Adjacency adj;
                if (kind == "lsgc") {
                    adj = build_lsgc_adjacency(n, n, k);
                } else if (kind == "svga") {
                    adj = build_svga_adjacency(n, n, k);
                } else if (kind == "lattice") {
                    adj = build_lattice_adjacency(n, n);
                } else if (kind == "knn") {
                    adj = build_knn_adjacency(features, n * n, kFeatureDim, knn_k);
                } else {
                    throw std::invalid_argument("construction_bench: unknown kind " + kind);
                }
                const auto stop = clock::now();
                times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
                edges = adj.directed_edge_count();
            }
            std::sort(times.begin(), times.end());
            rows.push_back({kind, n, times[times.size() / 2], edges});
        }
    }
    return rows;
}

}  // namespace logvig::graph
