// Explicit-branching partial vertex cover for hereditary classes where any
// member graph has an independent set covering a ξ-fraction of its vertices:
// either k independent heavy vertices already cover t edges, or the heavy
// set is small enough to branch on each of its members.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcover/graph.hpp"

namespace pcover {

enum class GraphClass { Bipartite, TriangleFree, Degenerate, General };

struct ClassHint {
    GraphClass kind = GraphClass::General;
    int degeneracy = 0; // Degenerate only; planar graphs use 5

    static ClassHint bipartite() { return {GraphClass::Bipartite, 0}; }
    static ClassHint triangle_free() { return {GraphClass::TriangleFree, 0}; }
    static ClassHint degenerate(int d) { return {GraphClass::Degenerate, d}; }
    static ClassHint planar() { return {GraphClass::Degenerate, 5}; }
    static ClassHint general() { return {GraphClass::General, 0}; }
};

struct PvcInstance {
    Graph graph;
    int k = 0;
    long t = 0;
};

struct PvcStats {
    long nodes = 0;             // recursion tree nodes
    long branch_nodes = 0;      // nodes that branched over the heavy set
    long max_branch_width = 0;  // largest heavy set branched on
    long xi_violations = 0;     // branch widths beyond the class bound
    long independence_checks = 0;
};

struct PvcSolution {
    bool yes = false;
    VertexSet witness;
    long covered = 0;
    PvcStats stats;
};

// |{e : e has an endpoint in s}|.
long boundary_edges(const Graph& g, const VertexSet& s);

// Smallest d such that every subgraph has a vertex of degree <= d.
int degeneracy(const Graph& g);

// Verifies g matches the hint; throws InputError carrying a witness (odd
// cycle, triangle, or an over-dense core) otherwise.
void verify_class(const Graph& g, const ClassHint& hint);

// Independent set with the class-specific size guarantee: >= n/2 bipartite,
// >= max{Δ, n/(Δ+1)} triangle-free, >= n/(d+1) for d-degenerate.
VertexSet independent_set(const Graph& g, const ClassHint& hint);

// The per-branch bound on the heavy set implied by the class (ξ evaluated
// at k): 2k, 4k², (d+1)k.
long xi_bound(const ClassHint& hint, int k);

PvcSolution solve_pvc(const PvcInstance& inst, const ClassHint& hint);

} // namespace pcover
