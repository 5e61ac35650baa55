#include "pcover/center_solver.hpp"

#include <algorithm>

#include "pcover/treewidth.hpp"

namespace pcover {

BigInt diameter_threshold(int r, int k, int family_len, int committed) {
    if (r < 0 || k < 0 || family_len < 0 || committed < 0)
        throw InputError("diameter_threshold needs nonnegative inputs");
    BigInt base = BigInt(12 * r + 4) * (k + committed);
    BigInt out = 1;
    for (int i = 0; i <= family_len; ++i) out *= base;
    return out;
}

long planar_width_threshold(int r, int k) {
    if (r < 0 || k < 1) throw InputError("planar_width_threshold needs r >= 0, k >= 1");
    long h = 6L * ((8L * r + 2) * (k + 1) + 4L * r + 4);
    return 6L * h;
}

long scattered_diameter_bound(int k, int r, long l) {
    if (k < 1 || r < 0 || l < 1) throw InputError("scattered_diameter_bound needs positive inputs");
    return (6L * r + 2) * 2 * k * l;
}

namespace {

struct FamilyEntry {
    VertexSet set; // over the full graph
    int count;
};

// 𝒢: union over s in S of the induced ball subgraphs G[B_r(s)], compacted.
struct WorkingSubgraph {
    Graph graph;
    WeightFn weights;
    std::vector<int> to_orig;              // compact id -> original id
    std::vector<int> from_orig;            // original id -> compact id or -1

    VertexSet lift(const VertexSet& sub) const {
        VertexSet out(from_orig.size());
        sub.for_each([&](int v) { out.set(to_orig[v]); });
        return out;
    }
    VertexSet restrict(const VertexSet& full) const {
        VertexSet out(to_orig.size());
        full.for_each([&](int v) {
            if (from_orig[v] >= 0) out.set(from_orig[v]);
        });
        return out;
    }
};

WorkingSubgraph build_ball_union_subgraph(const Graph& g, const WeightFn& w, const VertexSet& s,
                                          int r) {
    const int n = g.vertex_count();
    auto sources = s.to_vector();
    std::vector<Bitset> balls;
    balls.reserve(sources.size());
    Bitset universe(n);
    for (int v : sources) {
        balls.push_back(ball(g, v, r));
        universe |= balls.back();
    }

    // covers[x]: which source balls contain x — an edge survives iff its
    // endpoints share one.
    const std::size_t ns = sources.size();
    std::vector<Bitset> covers(n, Bitset(ns));
    for (std::size_t i = 0; i < ns; ++i)
        balls[i].for_each([&](int x) { covers[x].set(i); });

    WorkingSubgraph out;
    out.to_orig = universe.to_vector();
    out.from_orig.assign(n, -1);
    for (std::size_t i = 0; i < out.to_orig.size(); ++i)
        out.from_orig[out.to_orig[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : g.edges()) {
        if (out.from_orig[x] < 0 || out.from_orig[y] < 0) continue;
        if (covers[x].intersects(covers[y]))
            edges.emplace_back(out.from_orig[x], out.from_orig[y]);
    }
    out.graph = Graph(static_cast<int>(out.to_orig.size()), edges);

    Bitset ones(out.to_orig.size());
    for (std::size_t i = 0; i < out.to_orig.size(); ++i)
        if (w.weight(out.to_orig[i])) ones.set(i);
    out.weights = WeightFn(ones);
    return out;
}

class Solver {
public:
    Solver(const CenterInstance& inst) : inst_(inst), allowed_(inst.graph.vertex_count()) {
        if (inst.k < 0 || inst.r < 0 || inst.t < 0)
            throw InputError("instance needs k, r, t >= 0");
        if (static_cast<int>(inst.weights.size()) != inst.graph.vertex_count())
            throw InputError("weight function sized for a different graph");
        if (inst.allowed_centers) {
            if (static_cast<int>(inst.allowed_centers->size()) != inst.graph.vertex_count())
                throw InputError("allowed-centers set sized for a different graph");
            allowed_ = *inst.allowed_centers;
        } else {
            for (int v = 0; v < inst.graph.vertex_count(); ++v) allowed_.set(v);
        }
    }

    Solution run() {
        Solution out;
        std::vector<FamilyEntry> family;
        VertexSet family_union(inst_.graph.vertex_count());
        VertexSet empty(inst_.graph.vertex_count());
        auto res = recurse(family, family_union, empty, 0);
        out.stats = std::move(stats_);
        if (res) {
            out.yes = true;
            out.witness = res->first;
            out.covered = res->second;
            if (static_cast<int>(out.witness.count()) > inst_.k || out.covered < inst_.t)
                throw std::logic_error("solver produced an invalid witness");
        } else {
            out.witness = VertexSet(inst_.graph.vertex_count());
        }
        return out;
    }

private:
    using Answer = std::optional<std::pair<VertexSet, long>>;

    // family_covered is the coverage of centers_so_far, the best witness
    // meeting the family's exact counts.
    Answer recurse(std::vector<FamilyEntry>& family, const VertexSet& family_union,
                   const VertexSet& centers_so_far, long family_covered) {
        ++stats_.recursive_calls;
        stats_.deepest_family = std::max(stats_.deepest_family, static_cast<int>(family.size()));
        const Graph& g = inst_.graph;
        int committed = 0;
        for (const auto& f : family) committed += f.count;

        // the family pattern already covers enough
        if (family_covered >= inst_.t) return std::make_pair(centers_so_far, family_covered);

        // budget exhausted on this branch
        const int k_rem = inst_.k - committed;
        if (k_rem == 0) return std::nullopt;

        // fresh heavy vertices; every compatible solution hits them
        const long t_rem = inst_.t - family_covered;
        VertexSet heavy = heavy_vertices(g, inst_.weights, inst_.r, t_rem, k_rem, family_union);
        heavy &= allowed_;
        if (heavy.none()) return std::nullopt;

        VertexSet s_all = family_union;
        s_all |= heavy;
        WorkingSubgraph sub = build_ball_union_subgraph(g, inst_.weights, s_all, inst_.r);

        std::optional<TreeDecomposition> td;
        bool try_scatter = false;
        if (inst_.mode == SolveMode::Planar) {
            // planar mode triggers on measured width instead of diameter
            td = build_decomposition(sub.graph);
            try_scatter = width(*td) > planar_width_threshold(inst_.r, inst_.k);
        } else {
            int diam = component_diameter(sub.graph);
            try_scatter =
                diameter_threshold(inst_.r, k_rem, static_cast<int>(family.size()), committed) <
                diam;
        }

        // early exit: scattered heavy vertices have disjoint balls, each
        // worth at least t_rem/k_rem, so together with the family witness
        // they reach t outright
        if (try_scatter) {
            auto sc = scattered_set(g, heavy, centers_so_far, inst_.r, k_rem);
            if (sc) {
                VertexSet combined = centers_so_far;
                combined |= *sc;
                long sum_single = 0;
                sc->for_each([&](int v) {
                    sum_single += ball_weight_single(g, inst_.weights, v, inst_.r);
                });
                long covered = ball_weight(g, inst_.weights, combined, inst_.r);
                if (covered != family_covered + sum_single || covered < inst_.t ||
                    static_cast<int>(combined.count()) > inst_.k)
                    throw std::logic_error("early exit failed verification");
                ++stats_.early_exits;
                return std::make_pair(combined, covered);
            }
            ++stats_.greedy_misses; // fall through to the DP, which stays exact
        }

        if (!td) td = build_decomposition(sub.graph);
        std::string why;
        if (!validate(sub.graph, *td, &why))
            throw std::logic_error("invalid decomposition: " + why);
        ++stats_.decompositions_validated;
        stats_.widths_used.push_back(width(*td));
        NiceDecomposition nice = to_nice(*td);
        if (nice.width() != width(*td))
            throw std::logic_error("to_nice changed the width");
        if (!validate(sub.graph, nice.as_tree_decomposition(), &why))
            throw std::logic_error("invalid nice decomposition: " + why);

        // one DP sweep, then branch on how many centers the fresh heavy set
        // contributes
        ConstraintList fixed;
        for (const auto& f : family) fixed.push_back({sub.restrict(f.set), f.count});
        VertexSet sweep = sub.restrict(heavy);

        DpOptions opts;
        opts.stats = &stats_.dp;
        auto best_by_count =
            coverage_sweep(sub.graph, nice, sub.weights, inst_.k, inst_.r, fixed, sweep, opts);

        for (int p = 1; p <= k_rem; ++p) {
            if (!best_by_count[p - 1]) continue;
            VertexSet d_full = sub.lift(best_by_count[p - 1]->witness);
            long child_covered = ball_weight(g, inst_.weights, d_full, inst_.r);
            if (child_covered != best_by_count[p - 1]->best_weight)
                throw std::logic_error("ball weight differs between subgraph and graph");

            family.push_back({heavy, p});
            VertexSet child_union = family_union;
            child_union |= heavy;
            auto res = recurse(family, child_union, d_full, child_covered);
            family.pop_back();
            if (res) return res;
        }
        return std::nullopt;
    }

    const CenterInstance& inst_;
    VertexSet allowed_;
    SolveStats stats_;
};

} // namespace

Solution solve(const CenterInstance& inst) { return Solver(inst).run(); }

Solution solve_pds(const Graph& g, int k, long t, SolveMode mode) {
    CenterInstance inst;
    inst.graph = g;
    inst.weights = WeightFn::all_ones(g.vertex_count());
    inst.k = k;
    inst.r = 1;
    inst.t = t;
    inst.mode = mode;
    return solve(inst);
}

Solution solve_psc(const Graph& incidence, const VertexSet& set_side, int k, long t,
                   SolveMode mode) {
    const int n = incidence.vertex_count();
    if (static_cast<int>(set_side.size()) != n)
        throw InputError("set side sized for a different graph");
    Bitset ones(n);
    for (int v = 0; v < n; ++v)
        if (!set_side.test(v)) ones.set(v);
    CenterInstance inst;
    inst.graph = incidence;
    inst.weights = WeightFn(ones);
    inst.k = k;
    inst.r = 1;
    inst.t = t;
    inst.mode = mode;
    inst.allowed_centers = set_side;
    return solve(inst);
}

} // namespace pcover
