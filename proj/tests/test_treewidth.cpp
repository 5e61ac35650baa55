#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcover/treewidth.hpp"
#include "support.hpp"

using namespace pcover;
namespace ts = testsupport;

namespace {

Graph random_tree(int n, ts::Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng.next(v)), v);
    return Graph(n, e);
}

} // namespace

TEST_CASE("validate accepts the textbook decompositions") {
    Graph p3 = ts::path(3);

    TreeDecomposition single;
    single.bags = {{0, 1, 2}};
    single.tree = {{}};
    CHECK(validate(p3, single));
    CHECK(width(single) == 2);

    TreeDecomposition two;
    two.bags = {{0, 1}, {1, 2}};
    two.tree = {{1}, {0}};
    CHECK(validate(p3, two));
    CHECK(width(two) == 1);
}

TEST_CASE("validate reports each violated condition") {
    Graph p3 = ts::path(3);
    std::string why;

    TreeDecomposition missing_vertex;
    missing_vertex.bags = {{0, 1}};
    missing_vertex.tree = {{}};
    CHECK(!validate(p3, missing_vertex, &why));
    CHECK(why.find("condition 1") != std::string::npos);

    TreeDecomposition missing_edge;
    missing_edge.bags = {{0, 1}, {2}};
    missing_edge.tree = {{1}, {0}};
    CHECK(!validate(p3, missing_edge, &why));
    CHECK(why.find("condition 2") != std::string::npos);

    // vertex 1 present at both ends of a 3-node path of bags but not the middle
    TreeDecomposition split;
    split.bags = {{0, 1}, {0, 2}, {1, 2}};
    split.tree = {{1}, {0, 2}, {1}};
    CHECK(!validate(p3, split, &why));
    CHECK(why.find("condition 3") != std::string::npos);

    TreeDecomposition cycle_tree;
    cycle_tree.bags = {{0, 1}, {1, 2}, {0, 2}};
    cycle_tree.tree = {{1, 2}, {0, 2}, {0, 1}};
    CHECK(!validate(p3, cycle_tree, &why));
    CHECK(why.find("tree") != std::string::npos);
}

TEST_CASE("width of a single bag") {
    TreeDecomposition td;
    td.bags = {{0, 1, 2, 3, 4}};
    td.tree = {{}};
    CHECK(width(td) == 4);
}

TEST_CASE("build_decomposition hits known widths") {
    CHECK(width(build_decomposition(ts::complete(4))) == 3);
    CHECK(width(build_decomposition(ts::cycle(5))) == 2);
    CHECK(width(build_decomposition(ts::grid(3, 3))) == 3);
    CHECK(exact_treewidth(ts::cycle(5)) == 2);
    CHECK(exact_treewidth(ts::complete(4)) == 3);
    CHECK(exact_treewidth(ts::grid(3, 3)) == 3);
    CHECK(exact_treewidth(ts::path(7)) == 1);
}

TEST_CASE("heuristic stays near-optimal on trees and valid everywhere") {
    ts::Rng rng(3);
    for (int rep = 0; rep < 25; ++rep) {
        Graph t = random_tree(2 + static_cast<int>(rng.next(30)), rng);
        TreeDecomposition td = build_decomposition(t);
        CHECK(validate(t, td));
        CHECK(width(td) <= 2);
    }
    for (int rep = 0; rep < 25; ++rep) {
        int n = 2 + static_cast<int>(rng.next(14));
        Graph g = ts::random_gnp(n, 0.3, rng);
        TreeDecomposition td = build_decomposition(g);
        CHECK(validate(g, td));
    }
}

TEST_CASE("a planted clique forces the width") {
    // K5 plus pendant path
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
    e.emplace_back(4, 5);
    e.emplace_back(5, 6);
    Graph g(7, e);
    CHECK(width(build_decomposition(g)) >= 4);
}

TEST_CASE("to_nice on tiny decompositions") {
    Graph one(1, {});
    TreeDecomposition td;
    td.bags = {{0}};
    td.tree = {{}};
    NiceDecomposition nd = to_nice(td);
    CHECK(nd.width() == 0);
    CHECK(validate(one, nd.as_tree_decomposition()));
    CHECK(nd.nodes[nd.root].bag.empty());

    Graph p3 = ts::path(3);
    TreeDecomposition two;
    two.bags = {{0, 1}, {1, 2}};
    two.tree = {{1}, {0}};
    NiceDecomposition nd2 = to_nice(two);
    CHECK(nd2.width() == width(two));
    CHECK(validate(p3, nd2.as_tree_decomposition()));
}

TEST_CASE("to_nice preserves width, validates, and stays compact") {
    ts::Rng rng(9);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 2 + static_cast<int>(rng.next(12));
        Graph g = ts::random_gnp(n, 0.35, rng);
        TreeDecomposition td = build_decomposition(g);
        NiceDecomposition nd = to_nice(td);
        CHECK(nd.width() == width(td));
        CHECK(validate(g, nd.as_tree_decomposition()));
        // every node kind is well-formed
        for (const auto& node : nd.nodes) {
            switch (node.kind) {
                case NiceKind::Leaf:
                    CHECK(node.bag.empty());
                    break;
                case NiceKind::Introduce: {
                    const auto& child = nd.nodes[node.left].bag;
                    CHECK(node.bag.size() == child.size() + 1);
                    CHECK(std::binary_search(node.bag.begin(), node.bag.end(), node.vertex));
                    break;
                }
                case NiceKind::Forget: {
                    const auto& child = nd.nodes[node.left].bag;
                    CHECK(node.bag.size() + 1 == child.size());
                    CHECK(std::binary_search(child.begin(), child.end(), node.vertex));
                    break;
                }
                case NiceKind::Join:
                    CHECK(nd.nodes[node.left].bag == node.bag);
                    CHECK(nd.nodes[node.right].bag == node.bag);
                    break;
            }
        }
        CHECK(nd.node_count() <= 8 * (nd.width() + 1) * n);
    }
}
