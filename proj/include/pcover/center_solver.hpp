// Implicit-branching solver for weighted partial (k,r,t)-center: repeatedly
// grow the heavy-vertex set, either take a scattered-set early exit when the
// working subgraph is wide/far-flung enough, or run the decomposition DP and
// branch on how many centers the fresh heavy set contributes.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "pcover/center_dp.hpp"
#include "pcover/graph.hpp"

namespace pcover {

using BigInt = boost::multiprecision::cpp_int;

enum class SolveMode { General, Planar };

struct CenterInstance {
    Graph graph;
    WeightFn weights;
    int k = 0;
    int r = 0;
    long t = 0;
    SolveMode mode = SolveMode::General;
    // restricts center placement (PSC reduction); empty optional = anywhere
    std::optional<VertexSet> allowed_centers;
};

struct SolveStats {
    long recursive_calls = 0;
    int deepest_family = 0;
    long early_exits = 0;
    long greedy_misses = 0; // scattered-set search failed after a trigger
    std::vector<int> widths_used;
    long decompositions_validated = 0;
    DpStats dp;
};

struct Solution {
    bool yes = false;
    VertexSet witness;
    long covered = 0;
    SolveStats stats;
};

Solution solve(const CenterInstance& inst);

// Partial dominating set: r = 1, unit weights.
Solution solve_pds(const Graph& g, int k, long t, SolveMode mode = SolveMode::General);

// Partial set cover through its incidence graph: set-side vertices weigh 0,
// element-side vertices weigh 1, r = 1, centers restricted to the set side.
Solution solve_psc(const Graph& incidence, const VertexSet& set_side, int k, long t,
                   SolveMode mode = SolveMode::General);

// ((12r+4) * (k+committed)) ^ (family_len+1); grows past 64 bits almost
// immediately, hence the big-int return.
BigInt diameter_threshold(int r, int k, int family_len, int committed);

// 36 * ((8r+2)(k+1) + 4r + 4).
long planar_width_threshold(int r, int k);

// Diameter above which a size-k scattered set always exists among the
// heavy vertices, given components of diameter at most l: (6r+2) * 2 * k * l.
long scattered_diameter_bound(int k, int r, long l);

} // namespace pcover
