#include "pcover/pvc.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace pcover {

long boundary_edges(const Graph& g, const VertexSet& s) {
    long deg_sum = 0;
    long internal_twice = 0;
    s.for_each([&](int v) {
        deg_sum += g.degree(v);
        internal_twice += static_cast<long>(g.neighbor_bits(v).count_and(s));
    });
    return deg_sum - internal_twice / 2;
}

namespace {

std::string join_ids(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
}

// 2-coloring per component; on failure returns the odd cycle through the
// offending edge.
bool two_color(const Graph& g, std::vector<int>& color, std::vector<int>* odd_cycle) {
    const int n = g.vertex_count();
    color.assign(n, -1);
    std::vector<int> parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    if (odd_cycle) {
                        std::vector<int> pu, pv;
                        for (int x = u; x >= 0; x = parent[x]) pu.push_back(x);
                        for (int x = v; x >= 0; x = parent[x]) pv.push_back(x);
                        while (pu.size() > 1 && pv.size() > 1 &&
                               pu[pu.size() - 2] == pv[pv.size() - 2]) {
                            pu.pop_back();
                            pv.pop_back();
                        }
                        *odd_cycle = pu; // ends at the meeting vertex
                        odd_cycle->insert(odd_cycle->end(), pv.rbegin() + 1, pv.rend());
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        Bitset common = g.neighbor_bits(u);
        common &= g.neighbor_bits(v);
        if (common.any()) {
            int x = common.to_vector().front();
            return std::array<int, 3>{u, v, x};
        }
    }
    return std::nullopt;
}

// Min-degree peeling. Returns the order; degeneracy = max min-degree seen.
std::vector<int> peel_order(const Graph& g, int* out_degeneracy) {
    const int n = g.vertex_count();
    Bitset alive(n);
    for (int v = 0; v < n; ++v) alive.set(v);
    std::vector<int> order;
    order.reserve(n);
    int degen = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_deg = -1;
        alive.for_each([&](int v) {
            long d = static_cast<long>(g.neighbor_bits(v).count_and(alive));
            if (best < 0 || d < best_deg) {
                best = v;
                best_deg = d;
            }
        });
        degen = std::max<int>(degen, static_cast<int>(best_deg));
        order.push_back(best);
        alive.reset(best);
    }
    if (out_degeneracy) *out_degeneracy = degen;
    return order;
}

VertexSet greedy_maximal_is(const Graph& g, const std::vector<int>& order) {
    VertexSet chosen(g.vertex_count());
    for (int v : order)
        if (!chosen.intersects(g.neighbor_bits(v))) chosen.set(v);
    return chosen;
}

void check_independent(const Graph& g, const VertexSet& x) {
    bool ok = true;
    x.for_each([&](int v) { ok = ok && !g.neighbor_bits(v).intersects(x); });
    if (!ok) throw std::logic_error("independent_set returned adjacent vertices");
}

} // namespace

int degeneracy(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int d = 0;
    peel_order(g, &d);
    return d;
}

void verify_class(const Graph& g, const ClassHint& hint) {
    switch (hint.kind) {
        case GraphClass::Bipartite: {
            std::vector<int> color, cyc;
            if (!two_color(g, color, &cyc))
                throw InputError("graph is not bipartite; odd cycle: " + join_ids(cyc));
            return;
        }
        case GraphClass::TriangleFree: {
            if (auto tri = find_triangle(g))
                throw InputError("graph has a triangle: " +
                                 join_ids({(*tri)[0], (*tri)[1], (*tri)[2]}));
            return;
        }
        case GraphClass::Degenerate: {
            int d = degeneracy(g);
            if (d > hint.degeneracy)
                throw InputError("degeneracy " + std::to_string(d) + " exceeds hinted " +
                                 std::to_string(hint.degeneracy));
            return;
        }
        case GraphClass::General:
            return;
    }
}

VertexSet independent_set(const Graph& g, const ClassHint& hint) {
    const int n = g.vertex_count();
    VertexSet out(n);
    switch (hint.kind) {
        case GraphClass::Bipartite: {
            std::vector<int> color;
            if (!two_color(g, color, nullptr)) throw InputError("not bipartite");
            // larger side per component
            std::vector<int> comp(n, -1);
            int ncomp = 0;
            for (int s = 0; s < n; ++s) {
                if (comp[s] >= 0) continue;
                std::queue<int> q;
                q.push(s);
                comp[s] = ncomp;
                while (!q.empty()) {
                    int u = q.front();
                    q.pop();
                    for (int v : g.neighbors(u))
                        if (comp[v] < 0) {
                            comp[v] = ncomp;
                            q.push(v);
                        }
                }
                ++ncomp;
            }
            std::vector<std::array<long, 2>> tally(ncomp, {0, 0});
            for (int v = 0; v < n; ++v) ++tally[comp[v]][color[v]];
            for (int v = 0; v < n; ++v) {
                const auto& tl = tally[comp[v]];
                if (color[v] == (tl[0] >= tl[1] ? 0 : 1)) out.set(v);
            }
            break;
        }
        case GraphClass::TriangleFree: {
            if (n == 0) break;
            // best of: neighborhood of a max-degree vertex (independent when
            // triangle-free) and a plain greedy pass
            int vmax = 0;
            for (int v = 1; v < n; ++v)
                if (g.degree(v) > g.degree(vmax)) vmax = v;
            VertexSet nbhd = g.neighbor_bits(vmax);
            std::vector<int> ids(n);
            for (int v = 0; v < n; ++v) ids[v] = v;
            VertexSet greedy = greedy_maximal_is(g, ids);
            out = nbhd.count() > greedy.count() ? nbhd : greedy;
            break;
        }
        case GraphClass::Degenerate: {
            out = greedy_maximal_is(g, peel_order(g, nullptr));
            break;
        }
        case GraphClass::General:
            out = greedy_maximal_is(g, peel_order(g, nullptr));
            break;
    }
    check_independent(g, out);
    return out;
}

long xi_bound(const ClassHint& hint, int k) {
    switch (hint.kind) {
        case GraphClass::Bipartite: return 2L * k;
        case GraphClass::TriangleFree: return 4L * k * k;
        case GraphClass::Degenerate: return static_cast<long>(hint.degeneracy + 1) * k;
        case GraphClass::General: break;
    }
    throw InputError("xi_bound needs a resolved class hint");
}

namespace {

class PvcSolver {
public:
    PvcSolver(const Graph& g, const ClassHint& hint) : g_(g), hint_(hint) {}

    PvcSolution run(int k, long t) {
        const int n = g_.vertex_count();
        Bitset alive(n);
        for (int v = 0; v < n; ++v) alive.set(v);
        VertexSet picked(n);
        PvcSolution out;
        auto res = recurse(alive, k, t, picked);
        out.stats = stats_;
        if (res) {
            out.yes = true;
            out.witness = *res;
            out.covered = boundary_edges(g_, out.witness);
            if (static_cast<int>(out.witness.count()) > k || out.covered < t)
                throw std::logic_error("pvc solver produced an invalid witness");
        } else {
            out.witness = VertexSet(n);
        }
        return out;
    }

private:
    std::optional<VertexSet> recurse(Bitset& alive, int k, long t, VertexSet& picked) {
        ++stats_.nodes;
        if (t <= 0) return picked;
        if (k == 0) return std::nullopt;

        // any valid cover must use a heavy vertex
        std::vector<int> heavy;
        alive.for_each([&](int v) {
            long deg = static_cast<long>(g_.neighbor_bits(v).count_and(alive));
            if (static_cast<long>(k) * deg >= t) heavy.push_back(v);
        });
        if (heavy.empty()) return std::nullopt;

        // independent heavy vertices cover edge-disjointly
        auto [hg, to_orig] = induced(heavy);
        ++stats_.independence_checks;
        VertexSet x = independent_set(hg, hint_);
        if (static_cast<int>(x.count()) >= k) {
            auto xs = x.to_vector();
            VertexSet result = picked;
            long gained = 0;
            for (int i = 0; i < k; ++i) {
                int v = to_orig[xs[i]];
                result.set(v);
                gained += static_cast<long>(g_.neighbor_bits(v).count_and(alive));
            }
            if (gained < t) throw std::logic_error("independent pick fails the degree-sum bound");
            return result;
        }

        ++stats_.branch_nodes;
        stats_.max_branch_width = std::max<long>(stats_.max_branch_width, heavy.size());
        if (static_cast<long>(heavy.size()) > xi_bound(hint_, k)) ++stats_.xi_violations;

        // descending current degree, ids break ties
        std::stable_sort(heavy.begin(), heavy.end(), [&](int a, int b) {
            return g_.neighbor_bits(a).count_and(alive) > g_.neighbor_bits(b).count_and(alive);
        });
        for (int v : heavy) {
            long deg = static_cast<long>(g_.neighbor_bits(v).count_and(alive));
            alive.reset(v);
            picked.set(v);
            auto res = recurse(alive, k - 1, t - deg, picked);
            picked.reset(v);
            alive.set(v);
            if (res) return res;
        }
        return std::nullopt;
    }

    // verts are drawn from the alive set, so adjacency needs no masking
    std::pair<Graph, std::vector<int>> induced(const std::vector<int>& verts) {
        std::vector<int> from(g_.vertex_count(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) from[verts[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (int u : verts)
            for (int v : g_.neighbors(u))
                if (from[v] > from[u]) edges.emplace_back(from[u], from[v]);
        return {Graph(static_cast<int>(verts.size()), edges), verts};
    }

    const Graph& g_;
    ClassHint hint_;
    PvcStats stats_;
};

} // namespace

PvcSolution solve_pvc(const PvcInstance& inst, const ClassHint& hint) {
    if (inst.k < 0 || inst.t < 0) throw InputError("pvc instance needs k, t >= 0");
    verify_class(inst.graph, hint);
    ClassHint effective = hint;
    if (hint.kind == GraphClass::General)
        effective = ClassHint::degenerate(degeneracy(inst.graph));
    return PvcSolver(inst.graph, effective).run(inst.k, inst.t);
}

} // namespace pcover
