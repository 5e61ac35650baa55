// Shared helpers for the test suites: small named graphs, deterministic
// random instances, and the connected-graph enumeration used by the
// acceptance sweep.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pcover/graph.hpp"

namespace testsupport {

using pcover::Bitset;
using pcover::Graph;
using pcover::WeightFn;

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph grid(int rows, int cols) {
    std::vector<std::pair<int, int>> e;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, e);
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t next(uint64_t bound) { return eng() % bound; }
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

inline Graph random_gnp(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) e.emplace_back(u, v);
    return Graph(n, e);
}

inline WeightFn random_weights(int n, Rng& rng) {
    Bitset ones(n);
    for (int v = 0; v < n; ++v)
        if (rng.next(2)) ones.set(v);
    return WeightFn(ones);
}

inline bool connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto d = pcover::bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

// All connected graphs on exactly n <= 6 vertices, one per isomorphism
// class (edge masks canonicalized over every vertex permutation).
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int nbits = static_cast<int>(pairs.size());
    std::vector<int> pair_index(n * n, -1);
    for (int i = 0; i < nbits; ++i) {
        auto [u, v] = pairs[i];
        pair_index[u * n + v] = pair_index[v * n + u] = i;
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << nbits); ++mask) {
        uint32_t canon = mask;
        for (const auto& pm : perms) {
            uint32_t mapped = 0;
            for (int i = 0; i < nbits; ++i)
                if (mask & (uint32_t(1) << i)) {
                    auto [u, v] = pairs[i];
                    mapped |= uint32_t(1) << pair_index[pm[u] * n + pm[v]];
                }
            canon = std::min(canon, mapped);
        }
        if (canon != mask) continue;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < nbits; ++i)
            if (mask & (uint32_t(1) << i)) edges.push_back(pairs[i]);
        Graph g(n, edges);
        if (connected(g)) out.push_back(std::move(g));
    }
    return out;
}

} // namespace testsupport
