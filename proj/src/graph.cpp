#include "pcover/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pcover {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : n_(vertex_count) {
    if (n_ < 0) throw InputError("negative vertex count");
    adj_.resize(n_);
    adj_bits_.assign(n_, Bitset(n_));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (adj_bits_[u].test(v))
            throw InputError("duplicate edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        adj_bits_[u].set(v);
        adj_bits_[v].set(u);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("invalid vertex id " + std::to_string(v));
}

std::vector<int> bfs_distances(const Graph& g, int v) {
    g.check_vertex(v);
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    dist[v] = 0;
    // frontier expansion by adjacency-row OR; `seen` masks finished vertices
    Bitset frontier(n), seen(n);
    frontier.set(v);
    seen.set(v);
    int d = 0;
    while (frontier.any()) {
        ++d;
        Bitset next(n);
        frontier.for_each([&](int u) { next |= g.neighbor_bits(u); });
        next.subtract(seen);
        next.for_each([&](int u) { dist[u] = d; });
        seen |= next;
        frontier = std::move(next);
    }
    return dist;
}

VertexSet ball(const Graph& g, int v, int r) {
    g.check_vertex(v);
    if (r < 0) throw InputError("negative radius");
    const int n = g.vertex_count();
    Bitset in_ball(n), frontier(n);
    in_ball.set(v);
    frontier.set(v);
    for (int layer = 0; layer < r && frontier.any(); ++layer) {
        Bitset next(n);
        frontier.for_each([&](int u) { next |= g.neighbor_bits(u); });
        next.subtract(in_ball);
        in_ball |= next;
        frontier = std::move(next);
    }
    return in_ball;
}

VertexSet ball_union(const Graph& g, const VertexSet& a, int r) {
    const int n = g.vertex_count();
    if (static_cast<int>(a.size()) != n) throw InputError("vertex set size mismatch");
    Bitset in_ball = a;
    Bitset frontier = a;
    for (int layer = 0; layer < r && frontier.any(); ++layer) {
        Bitset next(n);
        frontier.for_each([&](int u) { next |= g.neighbor_bits(u); });
        next.subtract(in_ball);
        in_ball |= next;
        frontier = std::move(next);
    }
    return in_ball;
}

long ball_weight(const Graph& g, const WeightFn& w, const VertexSet& a, int r) {
    return static_cast<long>(ball_union(g, a, r).count_and(w.ones()));
}

long ball_weight_single(const Graph& g, const WeightFn& w, int v, int r) {
    return static_cast<long>(ball(g, v, r).count_and(w.ones()));
}

int component_diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw InputError("diameter of empty graph");
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < n; ++u) diam = std::max(diam, dist[u]);
    }
    return diam;
}

VertexSet heavy_vertices(const Graph& g, const WeightFn& w, int r, long t, long k,
                         const VertexSet& excluded) {
    if (k < 1) throw InputError("heavy_vertices requires k >= 1");
    if (t < 1) throw InputError("heavy_vertices requires t >= 1");
    const int n = g.vertex_count();
    VertexSet heavy(n);
    for (int v = 0; v < n; ++v) {
        if (excluded.test(v)) continue;
        if (k * ball_weight_single(g, w, v, r) >= t) heavy.set(v);
    }
    return heavy;
}

namespace {

// Runs one greedy pass over `order`, keeping picks whose (2r)-neighborhoods
// avoid earlier picks; candidates near `forbidden` were already filtered.
std::optional<VertexSet> greedy_pass(const Graph& g, const std::vector<int>& order,
                                     const Bitset& eligible, int r, int target) {
    const int n = g.vertex_count();
    Bitset blocked(n);
    VertexSet picked(n);
    int got = 0;
    for (int v : order) {
        if (!eligible.test(v) || blocked.test(v)) continue;
        picked.set(v);
        blocked |= ball(g, v, 2 * r);
        if (++got == target) return picked;
    }
    return std::nullopt;
}

} // namespace

std::optional<VertexSet> scattered_set(const Graph& g, const VertexSet& candidates,
                                       const VertexSet& forbidden, int r, int target) {
    if (target < 1) throw InputError("scattered_set requires target >= 1");
    if (r < 0) throw InputError("negative radius");
    const int n = g.vertex_count();

    // Candidates within 2r of a forbidden vertex can never be chosen.
    Bitset eligible = candidates;
    eligible.subtract(ball_union(g, forbidden, 2 * r));
    if (static_cast<int>(eligible.count()) < target) return std::nullopt;

    std::vector<int> cand = eligible.to_vector();

    // Order 1: descending ball size.
    std::vector<long> bsize(n, 0);
    for (int v : cand) bsize[v] = static_cast<long>(ball(g, v, r).count());
    std::vector<int> by_ball = cand;
    std::stable_sort(by_ball.begin(), by_ball.end(),
                     [&](int a, int b) { return bsize[a] > bsize[b]; });

    // Order 2: BFS layers from an eccentric vertex (double BFS, smallest id
    // among the ties).
    int far1 = 0, best = -1;
    for (int v = 0; v < n; ++v) {
        auto d = bfs_distances(g, v);
        int ecc = *std::max_element(d.begin(), d.end());
        if (ecc > best) { best = ecc; far1 = v; }
    }
    auto layer_dist = bfs_distances(g, far1);
    std::vector<int> by_layer = cand;
    std::stable_sort(by_layer.begin(), by_layer.end(), [&](int a, int b) {
        int da = layer_dist[a] < 0 ? g.vertex_count() + 1 : layer_dist[a];
        int db = layer_dist[b] < 0 ? g.vertex_count() + 1 : layer_dist[b];
        return da < db;
    });

    for (const auto& order : {by_ball, by_layer}) {
        if (auto picked = greedy_pass(g, order, eligible, r, target)) {
            // The distance guarantees are part of the contract; re-check.
            auto vs = picked->to_vector();
            for (std::size_t i = 0; i < vs.size(); ++i) {
                auto dist = bfs_distances(g, vs[i]);
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (dist[vs[j]] >= 0 && dist[vs[j]] < 2 * r + 1)
                        throw std::logic_error("scattered_set produced close pair");
                bool far_ok = true;
                forbidden.for_each([&](int f) {
                    if (dist[f] >= 0 && dist[f] < 2 * r + 1) far_ok = false;
                });
                if (!far_ok) throw std::logic_error("scattered_set pick near forbidden set");
            }
            return picked;
        }
    }
    return std::nullopt;
}

} // namespace pcover
