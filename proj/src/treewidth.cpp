#include "pcover/treewidth.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace pcover {

int width(const TreeDecomposition& td) {
    if (td.bags.empty()) throw InputError("width of empty decomposition");
    std::size_t biggest = 0;
    for (const auto& b : td.bags) biggest = std::max(biggest, b.size());
    return static_cast<int>(biggest) - 1;
}

bool validate(const Graph& g, const TreeDecomposition& td, std::string* why) {
    const int n = g.vertex_count();
    const int nodes = td.node_count();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (nodes == 0) return fail("no nodes");

    // the tree must actually be a tree
    {
        int edge_ends = 0;
        std::vector<int> seen(nodes, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            edge_ends += static_cast<int>(td.tree[x].size());
            for (int y : td.tree[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    q.push(y);
                }
        }
        if (reached != nodes || edge_ends != 2 * (nodes - 1))
            return fail("decomposition graph is not a tree");
    }

    // condition 1: bags cover V
    std::vector<char> covered(n, 0);
    for (const auto& b : td.bags)
        for (int v : b) {
            if (v < 0 || v >= n) return fail("bag contains invalid vertex");
            covered[v] = 1;
        }
    for (int v = 0; v < n; ++v)
        if (!covered[v]) return fail("condition 1: vertex " + std::to_string(v) + " in no bag");

    // condition 2: every edge inside some bag
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const auto& b : td.bags) {
            if (std::binary_search(b.begin(), b.end(), u) &&
                std::binary_search(b.begin(), b.end(), v)) {
                found = true;
                break;
            }
        }
        if (!found)
            return fail("condition 2: edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") in no bag");
    }

    // condition 3: nodes holding v induce a subtree
    for (int v = 0; v < n; ++v) {
        int start = -1, holding = 0;
        for (int i = 0; i < nodes; ++i)
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                ++holding;
                if (start < 0) start = i;
            }
        if (holding == 0) continue;
        std::vector<int> seen(nodes, 0);
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        int reached = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : td.tree[x]) {
                if (seen[y] || !std::binary_search(td.bags[y].begin(), td.bags[y].end(), v))
                    continue;
                seen[y] = 1;
                ++reached;
                q.push(y);
            }
        }
        if (reached != holding)
            return fail("condition 3: vertex " + std::to_string(v) + " bags disconnected");
    }
    return true;
}

namespace {

// Decomposition from an elimination order: bag(v) = {v} + not-yet-eliminated
// neighbors in the fill graph; parent(bag(v)) = bag of the next eliminated
// member, falling back to the next bag in order for early-exhausted pieces.
TreeDecomposition from_elimination_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<Bitset> fill;
    fill.reserve(n);
    for (int v = 0; v < n; ++v) fill.push_back(g.neighbor_bits(v));

    TreeDecomposition td;
    td.bags.resize(n);
    td.tree.resize(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        fill[v].for_each([&](int u) {
            if (pos[u] > i) later.push_back(u);
        });
        // make the remaining neighborhood a clique
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                fill[later[a]].set(later[b]);
                fill[later[b]].set(later[a]);
            }
        td.bags[i] = later;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());

        int parent;
        if (!later.empty()) {
            int next = *std::min_element(later.begin(), later.end(),
                                         [&](int a, int b) { return pos[a] < pos[b]; });
            parent = pos[next];
        } else {
            parent = i + 1 < n ? i + 1 : -1;
        }
        if (parent >= 0) {
            td.tree[i].push_back(parent);
            td.tree[parent].push_back(i);
        }
    }
    td.root = n - 1;
    if (n == 0) throw InputError("decomposition of empty graph");
    return td;
}

std::vector<int> min_fill_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bitset> fill;
    fill.reserve(n);
    for (int v = 0; v < n; ++v) fill.push_back(g.neighbor_bits(v));
    Bitset remaining(n);
    for (int v = 0; v < n; ++v) remaining.set(v);

    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        long best_deg = -1;
        remaining.for_each([&](int v) {
            Bitset nb = fill[v];
            nb &= remaining;
            auto ns = nb.to_vector();
            long deg = static_cast<long>(ns.size());
            long need = 0;
            for (std::size_t a = 0; a < ns.size(); ++a)
                for (std::size_t b = a + 1; b < ns.size(); ++b)
                    if (!fill[ns[a]].test(ns[b])) ++need;
            if (best < 0 || need < best_fill || (need == best_fill && deg < best_deg)) {
                best = v;
                best_fill = need;
                best_deg = deg;
            }
        });
        order.push_back(best);
        Bitset nb = fill[best];
        nb &= remaining;
        auto ns = nb.to_vector();
        for (std::size_t a = 0; a < ns.size(); ++a)
            for (std::size_t b = a + 1; b < ns.size(); ++b) {
                fill[ns[a]].set(ns[b]);
                fill[ns[b]].set(ns[a]);
            }
        remaining.reset(best);
    }
    return order;
}

// Q(S, v): neighbors of v outside S∪{v} reachable through S.
int elimination_degree(const Graph& g, uint32_t S, int v) {
    uint32_t seen = (uint32_t(1) << v);
    uint32_t stack = uint32_t(1) << v;
    uint32_t result = 0;
    while (stack) {
        int u = std::countr_zero(stack);
        stack &= stack - 1;
        for (int wv : g.neighbors(u)) {
            uint32_t bit = uint32_t(1) << wv;
            if (seen & bit) continue;
            seen |= bit;
            if (S & bit)
                stack |= bit; // pass through eliminated vertices
            else
                result |= bit;
        }
    }
    return std::popcount(result);
}

// g(S) = best achievable max-elimination-degree over orders of S; recovers
// an optimal full order.
std::vector<int> exact_elimination_order(const Graph& g, int* opt_width) {
    const int n = g.vertex_count();
    const uint32_t full = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    std::vector<int8_t> cost(full + 1, int8_t(127));
    std::vector<int8_t> choice(full + 1, int8_t(-1));
    cost[0] = 0;
    for (uint32_t S = 1; S <= full; ++S) {
        uint32_t bits = S;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            uint32_t prev = S & ~(uint32_t(1) << v);
            int c = std::max<int>(cost[prev], elimination_degree(g, prev, v));
            if (c < cost[S]) {
                cost[S] = static_cast<int8_t>(c);
                choice[S] = static_cast<int8_t>(v);
            }
        }
    }
    if (opt_width) *opt_width = cost[full];
    std::vector<int> order(n);
    uint32_t S = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[S];
        order[i] = v;
        S &= ~(uint32_t(1) << v);
    }
    return order;
}

} // namespace

int exact_treewidth(const Graph& g) {
    if (g.vertex_count() == 0) throw InputError("treewidth of empty graph");
    if (g.vertex_count() > 20) throw ResourceError("exact_treewidth capped at n <= 20");
    int w = 0;
    exact_elimination_order(g, &w);
    return w;
}

TreeDecomposition build_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw InputError("decomposition of empty graph");
    TreeDecomposition best = from_elimination_order(g, min_fill_order(g));
    if (n < 13) {
        TreeDecomposition exact = from_elimination_order(g, exact_elimination_order(g, nullptr));
        if (width(exact) < width(best)) best = exact;
    }
    return best;
}

TreeDecomposition NiceDecomposition::as_tree_decomposition() const {
    TreeDecomposition td;
    td.bags.reserve(nodes.size());
    td.tree.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        td.bags.push_back(nodes[i].bag);
        for (int c : {nodes[i].left, nodes[i].right})
            if (c >= 0) {
                td.tree[i].push_back(c);
                td.tree[c].push_back(static_cast<int>(i));
            }
    }
    td.root = root;
    return td;
}

int NiceDecomposition::width() const {
    std::size_t biggest = 1;
    for (const auto& nd : nodes) biggest = std::max(biggest, nd.bag.size());
    return static_cast<int>(biggest) - 1;
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceKind kind, int vertex, std::vector<int> bag, int left, int right) {
        NiceNode nd;
        nd.kind = kind;
        nd.vertex = vertex;
        nd.bag = std::move(bag);
        nd.left = left;
        nd.right = right;
        nodes.push_back(std::move(nd));
        return static_cast<int>(nodes.size()) - 1;
    }

    // chain of forgets then introduces transforming bag `from` into `to`
    int bridge(int below, std::vector<int> from, const std::vector<int>& to) {
        int cur = below;
        for (int v : std::vector<int>(from)) {
            if (!std::binary_search(to.begin(), to.end(), v)) {
                from.erase(std::find(from.begin(), from.end(), v));
                cur = add(NiceKind::Forget, v, from, cur, -1);
            }
        }
        for (int v : to) {
            if (!std::binary_search(from.begin(), from.end(), v)) {
                from.insert(std::upper_bound(from.begin(), from.end(), v), v);
                cur = add(NiceKind::Introduce, v, from, cur, -1);
            }
        }
        return cur;
    }

    int leaf_chain(const std::vector<int>& to) {
        int cur = add(NiceKind::Leaf, -1, {}, -1, -1);
        return bridge(cur, {}, to);
    }
};

} // namespace

NiceDecomposition to_nice(const TreeDecomposition& td) {
    const int nodes = td.node_count();
    if (nodes == 0) throw InputError("to_nice of empty decomposition");
    NiceBuilder nb;

    // iterative post-order from td.root
    std::vector<int> parent(nodes, -2);
    std::vector<int> order;
    order.reserve(nodes);
    {
        std::vector<int> stack = {td.root};
        parent[td.root] = -1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            order.push_back(x);
            for (int y : td.tree[x])
                if (parent[y] == -2) {
                    parent[y] = x;
                    stack.push_back(y);
                }
        }
    }

    std::vector<int> built(nodes, -1); // nice node realizing bag(x) having processed x's subtree
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        std::vector<int> kids;
        for (int y : td.tree[x])
            if (parent[y] == x) kids.push_back(y);

        if (kids.empty()) {
            built[x] = nb.leaf_chain(td.bags[x]);
            continue;
        }
        // bring each child subtree up to bag(x), then join pairwise
        std::vector<int> lifted;
        for (int y : kids)
            lifted.push_back(nb.bridge(built[y], td.bags[y], td.bags[x]));
        int cur = lifted[0];
        for (std::size_t i = 1; i < lifted.size(); ++i)
            cur = nb.add(NiceKind::Join, -1, td.bags[x], cur, lifted[i]);
        built[x] = cur;
    }

    // forget everything above the original root so the DP ends on an empty bag
    int top = built[td.root];
    if (!nb.nodes[top].bag.empty()) top = nb.bridge(top, td.bags[td.root], {});

    NiceDecomposition out;
    out.nodes = std::move(nb.nodes);
    out.root = top;
    return out;
}

} // namespace pcover
