#include "pcover/center_dp.hpp"

#include <algorithm>
#include <unordered_map>

namespace pcover {
namespace {

// Per-vertex state ids: 0 = CENTER, 1..r-1 = UP_d, r-1+d = DOWN_d (d = 1..r),
// 2r = NEUTRAL. For r = 0 only {CENTER, NEUTRAL} remain.
struct Alphabet {
    int r;
    int count() const { return r == 0 ? 2 : 2 * r + 1; }
    int neutral() const { return r == 0 ? 1 : 2 * r; }
    bool is_center(int s) const { return s == 0; }
    bool is_neutral(int s) const { return s == neutral(); }
    bool is_up(int s) const { return r >= 2 && s >= 1 && s <= r - 1; }
    bool is_down(int s) const { return r >= 1 && s >= r && s <= 2 * r - 1; }
    // distance commitment carried by the state; -1 for NEUTRAL
    int label(int s) const {
        if (is_center(s)) return 0;
        if (is_up(s)) return s;
        if (is_down(s)) return s - (r - 1);
        return -1;
    }
    int up(int d) const { return d; }
    int down(int d) const { return r - 1 + d; }
};

struct Entry {
    long value = -1;
    std::vector<uint16_t> centers; // sorted
};

using Table = std::unordered_map<uint64_t, Entry>;
using Digits = std::vector<uint32_t>;

void merge(Table& t, uint64_t key, long value, std::vector<uint16_t> centers) {
    Entry& e = t[key];
    if (value > e.value || (value == e.value && centers < e.centers)) {
        e.value = value;
        e.centers = std::move(centers);
    }
}

class Engine {
public:
    Engine(const Graph& g, const NiceDecomposition& nd, const WeightFn& w, int r, int k_cap,
           long value_cap, const std::vector<const VertexSet*>& sets,
           const std::vector<int>& caps, const VertexSet* allowed, const DpOptions& opts)
        : g_(g), nd_(nd), w_(w), alpha_{r}, k_cap_(k_cap), value_cap_(value_cap), caps_(caps),
          allowed_(allowed), opts_(opts) {
        if (g.vertex_count() >= 65536) throw ResourceError("dp limited to n < 65536");
        constraint_of_.assign(g.vertex_count(), -1);
        for (std::size_t i = 0; i < sets.size(); ++i)
            sets[i]->for_each([&](int v) { constraint_of_[v] = static_cast<int>(i); });
    }

    // Root table keyed by (counts..., used); root bag is empty.
    Table run() {
        const auto& nodes = nd_.nodes;
        std::vector<Table> tables(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const NiceNode& nd = nodes[i];
            switch (nd.kind) {
                case NiceKind::Leaf: {
                    Digits dig(digit_count(0), 0);
                    merge(tables[i], encode(dig, 0), 0, {});
                    break;
                }
                case NiceKind::Introduce:
                    introduce(nd, tables[nd.left], tables[i]);
                    tables[nd.left].clear();
                    break;
                case NiceKind::Forget:
                    forget(nd, nodes[nd.left], tables[nd.left], tables[i]);
                    tables[nd.left].clear();
                    break;
                case NiceKind::Join:
                    join(nd, tables[nd.left], tables[nd.right], tables[i]);
                    tables[nd.left].clear();
                    tables[nd.right].clear();
                    break;
            }
            note_stats(nd, tables[i]);
            if (tables[i].size() > opts_.table_guard)
                throw ResourceError("dp table guard exceeded");
        }
        if (!nodes[nd_.root].bag.empty())
            throw std::logic_error("dp requires an empty root bag");
        return std::move(tables[nd_.root]);
    }

    int num_counts() const { return static_cast<int>(caps_.size()); }

    // digit layout: bag colors, then per-constraint counts, then centers used
    int digit_count(int bag_size) const { return bag_size + num_counts() + 1; }

    uint64_t encode(const Digits& dig, int bag_size) const {
        uint64_t key = 0;
        uint64_t place = 1;
        for (int i = 0; i < digit_count(bag_size); ++i) {
            key += dig[i] * place;
            place *= radix(i, bag_size);
        }
        return key;
    }

    Digits decode(uint64_t key, int bag_size) const {
        Digits dig(digit_count(bag_size));
        for (int i = 0; i < digit_count(bag_size); ++i) {
            uint64_t rad = radix(i, bag_size);
            dig[i] = static_cast<uint32_t>(key % rad);
            key /= rad;
        }
        return dig;
    }

private:
    uint64_t radix(int digit, int bag_size) const {
        if (digit < bag_size) return alpha_.count();
        if (digit < bag_size + num_counts()) return caps_[digit - bag_size] + 1;
        return k_cap_ + 1;
    }

    void check_key_space(int bag_size) const {
        unsigned __int128 prod = 1;
        for (int i = 0; i < digit_count(bag_size); ++i) {
            prod *= radix(i, bag_size);
            if (prod > ~uint64_t(0)) throw ResourceError("dp key space exceeds 64 bits");
        }
    }

    void note_stats(const NiceNode& nd, const Table& t) {
        if (!opts_.stats) return;
        DpStats& s = *opts_.stats;
        ++s.nodes;
        unsigned __int128 bound = 1;
        bool sat = false;
        for (std::size_t i = 0; i < nd.bag.size(); ++i) {
            bound *= alpha_.count();
            if (bound > (unsigned __int128)1 << 100) { sat = true; break; }
        }
        if (!sat) {
            for (int c : caps_) bound *= c + 1;
            bound *= k_cap_ + 1;
        }
        std::size_t b = sat ? ~std::size_t(0) : static_cast<std::size_t>(std::min<unsigned __int128>(bound, ~std::size_t(0)));
        if (t.size() > s.max_table) {
            s.max_table = t.size();
            s.bound_at_max = b;
        }
        if (t.size() > b) ++s.bound_violations;
    }

    void introduce(const NiceNode& nd, const Table& child, Table& out) {
        const auto& pbag = nd.bag;
        const int v = nd.vertex;
        const int pos = static_cast<int>(std::lower_bound(pbag.begin(), pbag.end(), v) - pbag.begin());
        std::vector<int> cbag = pbag;
        cbag.erase(cbag.begin() + pos);
        const int cbs = static_cast<int>(cbag.size());
        check_key_space(cbs + 1);

        // child-bag positions adjacent to v
        std::vector<int> nbpos;
        std::vector<char> is_nb(cbs, 0);
        for (int i = 0; i < cbs; ++i)
            if (g_.has_edge(v, cbag[i])) {
                nbpos.push_back(i);
                is_nb[i] = 1;
            }

        const bool may_center = !allowed_ || allowed_->test(v);
        const int r = alpha_.r;

        for (const auto& [key, e] : child) {
            Digits dig = decode(key, cbs);
            std::vector<char> witnessed(r + 1, 0);
            for (int i : nbpos) {
                int lbl = alpha_.label(dig[i]);
                if (lbl >= 0 && lbl + 1 <= r) witnessed[lbl + 1] = 1;
            }

            // enumerate v's state: (state, label)
            std::vector<std::pair<int, int>> choices;
            if (may_center) choices.emplace_back(0, 0);
            for (int d = 1; d <= r; ++d) {
                if (witnessed[d])
                    choices.emplace_back(alpha_.down(d), d);
                else if (d <= r - 1)
                    choices.emplace_back(alpha_.up(d), d);
            }
            if (r == 0 || !witnessed[r]) choices.emplace_back(alpha_.neutral(), -1);

            for (auto [state, lbl] : choices) {
                Digits nd2(digit_count(cbs + 1));
                // colors with v inserted; v's label may resolve bag neighbors
                for (int i = 0; i < cbs; ++i) {
                    int c = dig[i];
                    if (lbl >= 0 && is_nb[i]) {
                        if (alpha_.is_up(c) && alpha_.label(c) == lbl + 1)
                            c = alpha_.down(lbl + 1);
                        else if (alpha_.is_neutral(c) && r >= 1 && lbl == r - 1)
                            c = alpha_.down(r);
                    }
                    nd2[i < pos ? i : i + 1] = c;
                }
                nd2[pos] = state;
                for (int i = cbs; i < digit_count(cbs); ++i) nd2[i + 1] = dig[i];
                merge(out, encode(nd2, cbs + 1), e.value, e.centers);
            }
        }
    }

    void forget(const NiceNode& nd, const NiceNode& child_node, const Table& child, Table& out) {
        const auto& cbag = child_node.bag;
        const int v = nd.vertex;
        const int pos = static_cast<int>(std::lower_bound(cbag.begin(), cbag.end(), v) - cbag.begin());
        const int cbs = static_cast<int>(cbag.size());

        for (const auto& [key, e] : child) {
            Digits dig = decode(key, cbs);
            const int state = dig[pos];
            if (alpha_.is_up(state)) continue; // unfulfilled promise

            long value = e.value;
            std::vector<uint16_t> centers = e.centers;
            Digits nd2(digit_count(cbs - 1));
            for (int i = 0; i < cbs; ++i)
                if (i != pos) nd2[i < pos ? i : i - 1] = dig[i];
            int used = dig[cbs + num_counts()];
            for (int i = 0; i < num_counts(); ++i) nd2[cbs - 1 + i] = dig[cbs + i];

            if (alpha_.is_center(state)) {
                if (++used > k_cap_) continue;
                int ci = constraint_of_[v];
                if (ci >= 0) {
                    uint32_t& cnt = nd2[cbs - 1 + ci];
                    if (static_cast<int>(++cnt) > caps_[ci]) continue;
                }
                value += w_.weight(v); // a center always covers itself
                centers.insert(std::lower_bound(centers.begin(), centers.end(), v),
                               static_cast<uint16_t>(v));
            } else if (alpha_.is_down(state)) {
                value += w_.weight(v);
            }
            nd2[cbs - 1 + num_counts()] = used;
            merge(out, encode(nd2, cbs - 1), std::min(value, value_cap_), std::move(centers));
        }
    }

    // Compatible states merge per vertex: equal commitments OR the witness
    // bit (DOWN beats UP); NEUTRAL pairs only with NEUTRAL or DOWN_r.
    int combine(int a, int b) const {
        if (a == b) return a;
        int la = alpha_.label(a), lb = alpha_.label(b);
        if (la >= 1 && la == lb) {
            if (alpha_.is_up(a) && alpha_.is_down(b)) return b;
            if (alpha_.is_down(a) && alpha_.is_up(b)) return a;
        }
        if (alpha_.r >= 1) {
            int dr = alpha_.down(alpha_.r);
            if (alpha_.is_neutral(a) && b == dr) return b;
            if (a == dr && alpha_.is_neutral(b)) return a;
        }
        return -1;
    }

    void join(const NiceNode& nd, const Table& left, const Table& right, Table& out) {
        const int bs = static_cast<int>(nd.bag.size());
        std::vector<std::pair<Digits, const Entry*>> rdec;
        rdec.reserve(right.size());
        for (const auto& [key, e] : right) rdec.emplace_back(decode(key, bs), &e);

        for (const auto& [lkey, le] : left) {
            Digits ld = decode(lkey, bs);
            for (const auto& [rd, re] : rdec) {
                Digits nd2(digit_count(bs));
                bool ok = true;
                for (int i = 0; i < bs && ok; ++i) {
                    int c = combine(ld[i], rd[i]);
                    if (c < 0) ok = false;
                    else nd2[i] = c;
                }
                if (!ok) continue;
                for (int i = 0; i < num_counts(); ++i) {
                    uint32_t sum = ld[bs + i] + rd[bs + i];
                    if (static_cast<int>(sum) > caps_[i]) { ok = false; break; }
                    nd2[bs + i] = sum;
                }
                if (!ok) continue;
                uint32_t used = ld[bs + num_counts()] + rd[bs + num_counts()];
                if (static_cast<int>(used) > k_cap_) continue;
                nd2[bs + num_counts()] = used;

                // forgotten vertices below the two children are disjoint
                std::vector<uint16_t> centers;
                centers.reserve(le.centers.size() + re->centers.size());
                std::merge(le.centers.begin(), le.centers.end(), re->centers.begin(),
                           re->centers.end(), std::back_inserter(centers));
                merge(out, encode(nd2, bs), std::min(le.value + re->value, value_cap_),
                      std::move(centers));
            }
        }
    }

    const Graph& g_;
    const NiceDecomposition& nd_;
    const WeightFn& w_;
    Alphabet alpha_;
    int k_cap_;
    long value_cap_;
    std::vector<int> caps_;
    std::vector<int> constraint_of_;
    const VertexSet* allowed_;
    const DpOptions& opts_;
};

void validate_constraints(const Graph& g, const ConstraintList& constraints) {
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (static_cast<int>(constraints[i].set.size()) != g.vertex_count())
            throw InputError("constraint set sized for a different graph");
        if (constraints[i].set.none()) throw InputError("empty constraint set");
        if (constraints[i].count < 1) throw InputError("constraint count must be positive");
        for (std::size_t j = i + 1; j < constraints.size(); ++j)
            if (constraints[i].set.intersects(constraints[j].set))
                throw InputError("constraint sets overlap");
    }
}

VertexSet centers_to_set(const std::vector<uint16_t>& centers, int n) {
    VertexSet out(n);
    for (uint16_t v : centers) out.set(v);
    return out;
}

} // namespace

std::optional<CenterAnswer> dp_partial_center(const Graph& g, const NiceDecomposition& nd,
                                              const WeightFn& w, int k, int r, long t,
                                              const ConstraintList& constraints,
                                              const DpOptions& opts) {
    if (k < 0 || r < 0 || t < 0) throw InputError("dp_partial_center needs k, r, t >= 0");
    validate_constraints(g, constraints);
    long count_sum = 0;
    for (const auto& c : constraints) count_sum += c.count;
    if (count_sum > k) throw InputError("constraint counts exceed k");

    std::vector<const VertexSet*> sets;
    std::vector<int> caps;
    for (const auto& c : constraints) {
        sets.push_back(&c.set);
        caps.push_back(c.count);
    }

    Engine eng(g, nd, w, r, k, std::max<long>(t, 0), sets, caps, opts.allowed_centers, opts);
    Table root = eng.run();

    const int p = static_cast<int>(constraints.size());
    const Entry* best = nullptr;
    for (const auto& [key, e] : root) {
        Digits dig = eng.decode(key, 0);
        bool exact = true;
        for (int i = 0; i < p; ++i)
            if (static_cast<int>(dig[i]) != constraints[i].count) exact = false;
        if (!exact) continue;
        if (!best || e.value > best->value ||
            (e.value == best->value && e.centers < best->centers))
            best = &e;
    }
    if (!best || best->value < t) return std::nullopt;

    CenterAnswer ans;
    ans.centers = centers_to_set(best->centers, g.vertex_count());
    ans.covered = ball_weight(g, w, ans.centers, r);
    if (ans.covered < t) throw std::logic_error("dp witness fails its own coverage bound");
    return ans;
}

std::vector<std::optional<SweepEntry>> coverage_sweep(const Graph& g, const NiceDecomposition& nd,
                                           const WeightFn& w, int k_total, int r,
                                           const ConstraintList& fixed, const VertexSet& sweep,
                                           const DpOptions& opts) {
    if (k_total < 0 || r < 0) throw InputError("coverage_sweep needs k, r >= 0");
    if (sweep.none()) // nothing selectable, every entry absent
        return std::vector<std::optional<SweepEntry>>(std::max(k_total, 0));
    ConstraintList all = fixed;
    all.push_back({sweep, 1});
    validate_constraints(g, all);

    std::vector<const VertexSet*> sets;
    std::vector<int> caps;
    long fixed_sum = 0;
    for (const auto& c : fixed) {
        sets.push_back(&c.set);
        caps.push_back(c.count);
        fixed_sum += c.count;
    }
    sets.push_back(&sweep);
    caps.push_back(static_cast<int>(std::max<long>(0, k_total - fixed_sum)));

    // centers may only come from the constraint sets here
    VertexSet allowed(g.vertex_count());
    for (const auto* s : sets) allowed |= *s;
    if (opts.allowed_centers) allowed &= *opts.allowed_centers;

    DpOptions inner = opts;
    inner.allowed_centers = &allowed;
    Engine eng(g, nd, w, r, k_total, w.total(), sets, caps, &allowed, inner);
    Table root = eng.run();

    const int p = static_cast<int>(fixed.size());
    std::vector<std::optional<SweepEntry>> out(std::max(k_total, 0));
    std::vector<const Entry*> best(k_total + 1, nullptr);
    for (const auto& [key, e] : root) {
        Digits dig = eng.decode(key, 0);
        bool exact = true;
        for (int i = 0; i < p; ++i)
            if (static_cast<int>(dig[i]) != fixed[i].count) exact = false;
        if (!exact) continue;
        int j = static_cast<int>(dig[p]);
        if (j < 1 || j > k_total) continue;
        const Entry*& b = best[j];
        if (!b || e.value > b->value || (e.value == b->value && e.centers < b->centers))
            b = &e;
    }
    for (int j = 1; j <= k_total; ++j) {
        if (!best[j]) continue;
        SweepEntry me;
        me.witness = centers_to_set(best[j]->centers, g.vertex_count());
        me.best_weight = ball_weight(g, w, me.witness, r);
        if (me.best_weight != best[j]->value)
            throw std::logic_error("coverage_sweep witness weight mismatch");
        out[j - 1] = std::move(me);
    }
    return out;
}

} // namespace pcover
