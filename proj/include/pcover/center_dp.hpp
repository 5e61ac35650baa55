// Dynamic programming over a nice tree decomposition for weighted partial
// (k,r,t)-center queries with exact per-set selection counts.
//
// Each bag vertex carries one of 2r+1 states: CENTER, UP_d (committed to end
// up within distance d of a center, witness edge not yet seen, d < r),
// DOWN_d (witness edge seen, 1 <= d <= r), or NEUTRAL (no coverage promised;
// may still upgrade to DOWN_r when a distance-(r-1) neighbor shows up, which
// is why no UP_r state is needed). A vertex's weight is banked exactly once,
// at its forget node, when it leaves as CENTER or DOWN; UP states cannot be
// forgotten. Joins require equal distance commitments and OR the witness
// bits. For r = 0 the alphabet degenerates to {CENTER, NEUTRAL}.
#pragma once

#include <optional>
#include <vector>

#include "pcover/graph.hpp"
#include "pcover/treewidth.hpp"

namespace pcover {

struct ConstraintItem {
    VertexSet set; // nonempty, pairwise disjoint across the list
    int count = 0; // required |C ∩ set|, positive
};
using ConstraintList = std::vector<ConstraintItem>;

struct DpStats {
    long nodes = 0;
    std::size_t max_table = 0;     // largest per-node index count seen
    std::size_t bound_at_max = 0;  // structural bound at that node
    long bound_violations = 0;     // indices beyond (2r+1)^bag * prod(a_i+1) * (k+1)
};

struct DpOptions {
    std::size_t table_guard = 20'000'000; // per-node entry cap
    DpStats* stats = nullptr;
    // restrict center placement; used by the PSC reduction
    const VertexSet* allowed_centers = nullptr;
};

struct CenterAnswer {
    VertexSet centers;
    long covered = 0;
};

// Existence (and a witness) of C with |C| <= k, |C ∩ S_i| = a_i and
// w(B_r(C)) >= t. Table values are clamped at t. Ties among equal-weight
// witnesses break toward the lexicographically smallest center set.
std::optional<CenterAnswer> dp_partial_center(const Graph& g, const NiceDecomposition& nd,
                                              const WeightFn& w, int k, int r, long t,
                                              const ConstraintList& constraints,
                                              const DpOptions& opts = {});

struct SweepEntry {
    long best_weight = 0;
    VertexSet witness;
};

// One DP sweep computing, for j = 1..k_total, the maximum weight coverable
// by a center set drawn entirely from the constraint sets, meeting every
// fixed count exactly and taking exactly j vertices from `sweep`. Entry j-1
// is absent when no such set exists (e.g. j > |sweep|).
std::vector<std::optional<SweepEntry>> coverage_sweep(const Graph& g,
                                                      const NiceDecomposition& nd,
                                                      const WeightFn& w, int k_total, int r,
                                                      const ConstraintList& fixed,
                                                      const VertexSet& sweep,
                                                      const DpOptions& opts = {});

} // namespace pcover
