#include "pcover/oracles.hpp"

#include <algorithm>
#include <functional>

namespace pcover {
namespace {

// enumerate all subsets of `universe` of size exactly `sz`, ascending ids
void for_each_subset(const std::vector<int>& universe, int sz,
                     const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    pick.reserve(sz);
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == sz) {
            fn(pick);
            return;
        }
        std::size_t need = sz - pick.size();
        for (std::size_t i = from; i + need <= universe.size(); ++i) {
            pick.push_back(universe[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

long boundary_count(const Graph& g, const VertexSet& s) {
    long deg_sum = 0;
    long internal_twice = 0;
    s.for_each([&](int v) {
        deg_sum += g.degree(v);
        internal_twice += static_cast<long>(g.neighbor_bits(v).count_and(s));
    });
    return deg_sum - internal_twice / 2;
}

void record(OracleResult& res, long value, const std::vector<int>& set) {
    if (value > res.best_value) {
        res.best_value = value;
        res.witnesses.clear();
        res.witnesses.push_back(set);
    } else if (value == res.best_value) {
        res.witnesses.push_back(set);
    }
}

} // namespace

OracleResult brute_pvc(const Graph& g, int k, long t) {
    const int n = g.vertex_count();
    if (n > 20) throw ResourceError("brute_pvc capped at n <= 20");
    if (k < 0 || t < 0) throw InputError("brute_pvc needs k, t >= 0");

    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;

    OracleResult res;
    res.best_value = -1;
    for (int sz = 0; sz <= std::min(k, n); ++sz) {
        for_each_subset(verts, sz, [&](const std::vector<int>& pick) {
            VertexSet s(n);
            for (int v : pick) s.set(v);
            record(res, boundary_count(g, s), pick);
        });
    }
    res.feasible = res.best_value >= t;
    std::sort(res.witnesses.begin(), res.witnesses.end());
    if (!res.feasible) res.witnesses.clear();
    return res;
}

OracleResult brute_center(const Graph& g, const WeightFn& w, int k, int r, long t,
                          const std::vector<OracleConstraint>& constraints,
                          const VertexSet* allowed) {
    const int n = g.vertex_count();
    if (n > 16) throw ResourceError("brute_center capped at n <= 16");
    if (k < 0 || r < 0 || t < 0) throw InputError("brute_center needs k, r, t >= 0");

    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (!allowed || allowed->test(v)) verts.push_back(v);

    OracleResult res;
    res.best_value = -1;
    for (int sz = 0; sz <= std::min<int>(k, verts.size()); ++sz) {
        for_each_subset(verts, sz, [&](const std::vector<int>& pick) {
            VertexSet c(n);
            for (int v : pick) c.set(v);
            for (const auto& sc : constraints)
                if (static_cast<int>(c.count_and(sc.set)) != sc.count) return;
            record(res, ball_weight(g, w, c, r), pick);
        });
    }
    if (res.best_value < 0) {
        // no subset satisfied the constraint counts
        res.feasible = false;
        res.witnesses.clear();
        res.best_value = 0;
        return res;
    }
    res.feasible = res.best_value >= t;
    std::sort(res.witnesses.begin(), res.witnesses.end());
    if (!res.feasible) res.witnesses.clear();
    return res;
}

bool brute_scattered(const Graph& g, const VertexSet& candidates, const VertexSet& forbidden,
                     int r, int target) {
    auto cand = candidates.to_vector();
    if (cand.size() > 20) throw ResourceError("brute_scattered capped at 20 candidates");
    if (target > static_cast<int>(cand.size())) return false;
    if (target < 1) throw InputError("brute_scattered needs target >= 1");

    const int min_d = 2 * r + 1;
    std::vector<std::vector<int>> dist;
    dist.reserve(cand.size());
    for (int v : cand) dist.push_back(bfs_distances(g, v));
    auto far_enough = [&](int ci, int u) {
        int d = dist[ci][u];
        return d < 0 || d >= min_d;
    };

    bool found = false;
    for_each_subset(cand, target, [&](const std::vector<int>& pick) {
        if (found) return;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            std::size_t ci = std::lower_bound(cand.begin(), cand.end(), pick[i]) - cand.begin();
            for (std::size_t j = i + 1; j < pick.size(); ++j)
                if (!far_enough(ci, pick[j])) return;
            bool ok = true;
            forbidden.for_each([&](int f) { ok = ok && far_enough(ci, f); });
            if (!ok) return;
        }
        found = true;
    });
    return found;
}

} // namespace pcover
