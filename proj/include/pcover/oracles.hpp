// Brute-force reference solvers. Exhaustive by definition, capped at sizes
// where full sweeps stay cheap; every nontrivial expected value in the test
// suites is pinned against these.
#pragma once

#include <optional>
#include <vector>

#include "pcover/graph.hpp"

namespace pcover {

struct OracleResult {
    bool feasible = false;
    long best_value = 0;
    // all optimal vertex sets, each sorted, list in lexicographic order;
    // cleared when infeasible
    std::vector<std::vector<int>> witnesses;
};

struct OracleConstraint {
    VertexSet set;
    int count = 0;
};

// Max boundary-edge count over all subsets of size <= k. n <= 20.
OracleResult brute_pvc(const Graph& g, int k, long t);

// Max r-ball weight over all subsets C with |C| <= k, |C ∩ S_i| = count_i,
// and C ⊆ allowed when given. n <= 16.
OracleResult brute_center(const Graph& g, const WeightFn& w, int k, int r, long t,
                          const std::vector<OracleConstraint>& constraints = {},
                          const VertexSet* allowed = nullptr);

// Does any `target`-subset of candidates satisfy the scattered-set distance
// conditions? |candidates| <= 20.
bool brute_scattered(const Graph& g, const VertexSet& candidates, const VertexSet& forbidden,
                     int r, int target);

} // namespace pcover
