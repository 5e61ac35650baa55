// Undirected simple graph with {0,1} vertex weights, plus the ball/distance
// machinery the partial-cover solvers are built on.
#pragma once

#include <optional>
#include <vector>

#include "pcover/bitset.hpp"
#include "pcover/errors.hpp"

namespace pcover {

using VertexSet = Bitset;

class Graph {
public:
    Graph() = default;
    // Edges are unordered pairs of 0-based ids. Loops, duplicates and
    // out-of-range ids are rejected.
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const Bitset& neighbor_bits(int v) const { return adj_bits_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return adj_bits_[u].test(v); }
    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> adj_bits_;
};

// Vertex weights in {0,1}, stored as the set of weight-1 vertices.
class WeightFn {
public:
    WeightFn() = default;
    explicit WeightFn(const Bitset& ones) : ones_(ones) {}
    static WeightFn all_ones(int n) {
        Bitset b(n);
        for (int v = 0; v < n; ++v) b.set(v);
        return WeightFn(b);
    }

    int weight(int v) const { return ones_.test(v) ? 1 : 0; }
    const Bitset& ones() const { return ones_; }
    long total() const { return static_cast<long>(ones_.count()); }
    std::size_t size() const { return ones_.size(); }

private:
    Bitset ones_;
};

// BFS distances from v; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int v);

// All vertices within distance r of v (always contains v).
VertexSet ball(const Graph& g, int v, int r);

// Union of radius-r balls around the members of a.
VertexSet ball_union(const Graph& g, const VertexSet& a, int r);

// Total weight of the union of balls, each vertex counted once.
long ball_weight(const Graph& g, const WeightFn& w, const VertexSet& a, int r);
long ball_weight_single(const Graph& g, const WeightFn& w, int v, int r);

// Max over connected components of the component diameter; 0 when every
// vertex is isolated. Errors on the empty graph.
int component_diameter(const Graph& g);

// {v not in excluded : k * w(B_r(v)) >= t}. The threshold test is integer
// cross-multiplication; k = 0 is an input error.
VertexSet heavy_vertices(const Graph& g, const WeightFn& w, int r, long t, long k,
                         const VertexSet& excluded);

// Greedy search for `target` candidates pairwise at distance >= 2r+1 and at
// distance >= 2r+1 from every forbidden vertex. A returned set satisfies the
// distance conditions by construction (they are re-checked); nullopt means
// the greedy orders failed, not that no such set exists.
std::optional<VertexSet> scattered_set(const Graph& g, const VertexSet& candidates,
                                       const VertexSet& forbidden, int r, int target);

} // namespace pcover
