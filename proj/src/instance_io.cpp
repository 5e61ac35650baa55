#include "pcover/instance_io.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pcover/pvc.hpp"

namespace pcover {

ParsedInstance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1, edges_seen = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> weight_override; // parallel lists v, value
    std::vector<int> weight_value;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            if (!(ls >> kind >> n >> m) || kind != "pcover" || n < 0 || m < 0)
                throw ParseError(lineno, "expected 'p pcover <n> <m>'");
            continue;
        }
        if (n < 0) throw ParseError(lineno, "line before the problem line");
        if (tag == "e") {
            long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            ++edges_seen;
            continue;
        }
        if (tag == "w") {
            long v, val;
            if (!(ls >> v >> val) || (val != 0 && val != 1))
                throw ParseError(lineno, "expected 'w <v> <0|1>'");
            if (v < 1 || v > n) throw ParseError(lineno, "weight vertex out of range");
            weight_override.push_back(static_cast<int>(v - 1));
            weight_value.push_back(static_cast<int>(val));
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    if (n < 0) throw ParseError(lineno, "missing problem line");
    if (edges_seen != m)
        throw ParseError(lineno, "header promises " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges_seen));

    ParsedInstance out;
    try {
        out.graph = Graph(static_cast<int>(n), edges);
    } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
    }
    Bitset ones(n);
    for (long v = 0; v < n; ++v) ones.set(v);
    for (std::size_t i = 0; i < weight_override.size(); ++i) {
        if (weight_value[i])
            ones.set(weight_override[i]);
        else
            ones.reset(weight_override[i]);
    }
    out.weights = WeightFn(ones);
    return out;
}

ParsedInstance parse_instance_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

std::string serialize_instance(const Graph& g, const WeightFn& w) {
    std::ostringstream out;
    auto edges = g.edges();
    out << "p pcover " << g.vertex_count() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (w.weight(v) == 0) out << "w " << v + 1 << " 0\n";
    return out.str();
}

namespace {

// mt19937_64 raw draws only; distribution helpers are hand-rolled so output
// never depends on the standard library's implementation
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    // uniform in [0, bound)
    uint64_t next(uint64_t bound) { return eng() % bound; }
    // uniform in [0, 1)
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

ParsedInstance all_ones(Graph g) {
    ParsedInstance out;
    out.weights = WeightFn::all_ones(g.vertex_count());
    out.graph = std::move(g);
    return out;
}

long parse_long(const std::string& s, const std::string& spec) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("bad generator spec '" + spec + "'");
    }
}

double parse_prob(const std::string& s, const std::string& spec) {
    try {
        std::size_t used = 0;
        double p = std::stod(s, &used);
        if (used != s.size() || p < 0.0 || p > 1.0) throw std::invalid_argument(s);
        return p;
    } catch (const std::exception&) {
        throw InputError("bad generator spec '" + spec + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

ParsedInstance generate(const std::string& spec, uint64_t seed) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("bad generator spec '" + spec + "'");
    const std::string family = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    Rng rng(seed);

    if (family == "grid") {
        auto parts = split(args, 'x');
        if (parts.size() != 2) throw InputError("bad generator spec '" + spec + "'");
        long rows = parse_long(parts[0], spec), cols = parse_long(parts[1], spec);
        if (rows < 1 || cols < 1) throw InputError("grid needs positive dimensions");
        std::vector<std::pair<int, int>> edges;
        auto id = [&](long r, long c) { return static_cast<int>(r * cols + c); };
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c) {
                if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
                if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
            }
        return all_ones(Graph(static_cast<int>(rows * cols), edges));
    }
    if (family == "path") {
        long n = parse_long(args, spec);
        if (n < 1) throw InputError("path needs n >= 1");
        std::vector<std::pair<int, int>> edges;
        for (long v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        return all_ones(Graph(static_cast<int>(n), edges));
    }
    if (family == "star") {
        long n = parse_long(args, spec);
        if (n < 1) throw InputError("star needs n >= 1");
        std::vector<std::pair<int, int>> edges;
        for (long v = 1; v < n; ++v) edges.emplace_back(0, v);
        return all_ones(Graph(static_cast<int>(n), edges));
    }
    if (family == "gnp") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw InputError("bad generator spec '" + spec + "'");
        long n = parse_long(parts[0], spec);
        double p = parse_prob(parts[1], spec);
        if (n < 0) throw InputError("gnp needs n >= 0");
        std::vector<std::pair<int, int>> edges;
        for (long u = 0; u < n; ++u)
            for (long v = u + 1; v < n; ++v)
                if (rng.unit() < p) edges.emplace_back(u, v);
        return all_ones(Graph(static_cast<int>(n), edges));
    }
    if (family == "bipartite") {
        auto parts = split(args, ',');
        if (parts.size() != 3) throw InputError("bad generator spec '" + spec + "'");
        long a = parse_long(parts[0], spec), b = parse_long(parts[1], spec);
        double p = parse_prob(parts[2], spec);
        if (a < 0 || b < 0) throw InputError("bipartite needs nonnegative sides");
        std::vector<std::pair<int, int>> edges;
        for (long u = 0; u < a; ++u)
            for (long v = 0; v < b; ++v)
                if (rng.unit() < p) edges.emplace_back(u, a + v);
        auto out = all_ones(Graph(static_cast<int>(a + b), edges));
        verify_class(out.graph, ClassHint::bipartite());
        return out;
    }
    if (family == "trianglefree") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw InputError("bad generator spec '" + spec + "'");
        long n = parse_long(parts[0], spec);
        double p = parse_prob(parts[1], spec);
        if (n < 0) throw InputError("trianglefree needs n >= 0");
        // rejection per edge: candidates in random order, skipped when they
        // would close a triangle
        std::vector<std::pair<int, int>> candidates;
        for (long u = 0; u < n; ++u)
            for (long v = u + 1; v < n; ++v)
                if (rng.unit() < p) candidates.emplace_back(u, v);
        for (std::size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[rng.next(i)]);
        std::vector<Bitset> adj(n, Bitset(n));
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : candidates) {
            if (adj[u].intersects(adj[v])) continue;
            adj[u].set(v);
            adj[v].set(u);
            edges.emplace_back(u, v);
        }
        auto out = all_ones(Graph(static_cast<int>(n), edges));
        verify_class(out.graph, ClassHint::triangle_free());
        return out;
    }
    throw InputError("unknown generator family '" + family + "'");
}

} // namespace pcover
