// Tree decompositions: validation, a min-fill construction heuristic (exact
// search below 13 vertices), and normalization to nice form for the DP.
#pragma once

#include <string>
#include <vector>

#include "pcover/graph.hpp"

namespace pcover {

struct TreeDecomposition {
    // tree[i] lists the neighbors of node i in the decomposition tree
    std::vector<std::vector<int>> tree;
    std::vector<std::vector<int>> bags; // sorted vertex ids
    int root = 0;

    int node_count() const { return static_cast<int>(bags.size()); }
};

// Max bag size minus one.
int width(const TreeDecomposition& td);

// Checks the three defining conditions; on failure `why` (when given)
// receives a description of the first violated one.
bool validate(const Graph& g, const TreeDecomposition& td, std::string* why = nullptr);

// Min-fill elimination ordering; below 13 vertices an exact elimination
// search (subset DP) runs as well and the better of the two is kept.
TreeDecomposition build_decomposition(const Graph& g);

// Exact treewidth by elimination-order subset DP. Exponential in n; callers
// keep n small.
int exact_treewidth(const Graph& g);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceKind kind;
    int vertex = -1;          // introduce/forget only
    std::vector<int> bag;     // sorted
    int left = -1, right = -1; // children; join uses both
};

struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1; // root bag is empty: every vertex gets forgotten

    TreeDecomposition as_tree_decomposition() const;
    int width() const;
    int node_count() const { return static_cast<int>(nodes.size()); }
};

// Normalizes td to leaf/introduce/forget/join form of the same width.
NiceDecomposition to_nice(const TreeDecomposition& td);

} // namespace pcover
