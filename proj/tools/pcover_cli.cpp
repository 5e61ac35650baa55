// Command-line front end: load or generate an instance, dispatch to the
// requested solver, emit one JSON result record on stdout.
//
// Exit codes: 0 YES, 1 NO, 2 error, 3 oracle mismatch.
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcover/center_solver.hpp"
#include "pcover/instance_io.hpp"
#include "pcover/oracles.hpp"
#include "pcover/pvc.hpp"

using json = nlohmann::ordered_json;
using namespace pcover;

namespace {

std::vector<int> one_indexed(const VertexSet& s) {
    std::vector<int> out;
    s.for_each([&](int v) { out.push_back(v + 1); });
    return out;
}

struct Options {
    std::string problem;
    int k = 0;
    long t = 0;
    int r = -1;
    std::string klass = "general";
    std::string mode = "general";
    std::string input;
    std::string gen;
    bool oracle = false;
    uint64_t seed = 0;
};

ClassHint hint_from_name(const std::string& name) {
    if (name == "bipartite") return ClassHint::bipartite();
    if (name == "trianglefree") return ClassHint::triangle_free();
    if (name == "planar") return ClassHint::planar();
    if (name == "general") return ClassHint::general();
    throw InputError("unknown class '" + name + "'");
}

int run(const Options& opt) {
    ParsedInstance inst;
    if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in) throw InputError("cannot open '" + opt.input + "'");
        inst = parse_instance(in);
    } else {
        inst = generate(opt.gen, opt.seed);
    }
    const Graph& g = inst.graph;
    const int n = g.vertex_count();

    json record;
    record["problem"] = opt.problem;
    json params;
    params["k"] = opt.k;
    params["t"] = opt.t;
    if (opt.problem == "center") params["r"] = opt.r;
    if (opt.problem == "pvc") params["class"] = opt.klass;
    if (opt.problem != "pvc") params["mode"] = opt.mode;
    params["seed"] = opt.seed;
    params["source"] = opt.input.empty() ? "gen:" + opt.gen : opt.input;
    record["params"] = params;

    const auto started = std::chrono::steady_clock::now();
    bool yes = false;
    std::optional<bool> oracle_yes;

    if (opt.problem == "pvc") {
        PvcInstance pi{g, opt.k, opt.t};
        auto sol = solve_pvc(pi, hint_from_name(opt.klass));
        yes = sol.yes;
        record["answer"] = sol.yes ? "YES" : "NO";
        record["witness"] = sol.yes ? one_indexed(sol.witness) : std::vector<int>{};
        record["covered"] = sol.yes ? sol.covered : 0;
        json stats;
        stats["nodes"] = sol.stats.nodes;
        stats["branch_nodes"] = sol.stats.branch_nodes;
        stats["max_branch_width"] = sol.stats.max_branch_width;
        record["stats"] = stats;
        if (sol.yes && (boundary_edges(g, sol.witness) < opt.t ||
                        static_cast<int>(sol.witness.count()) > opt.k))
            throw std::logic_error("witness failed re-verification");
        if (opt.oracle) {
            if (n <= 20)
                oracle_yes = brute_pvc(g, opt.k, opt.t).feasible;
            else
                std::cerr << "oracle skipped: n > 20\n";
        }
    } else {
        CenterInstance ci;
        ci.graph = g;
        ci.k = opt.k;
        ci.t = opt.t;
        ci.mode = opt.mode == "planar" ? SolveMode::Planar : SolveMode::General;
        VertexSet set_side(n);
        if (opt.problem == "center") {
            ci.r = opt.r;
            ci.weights = inst.weights;
        } else if (opt.problem == "pds") {
            ci.r = 1;
            ci.weights = WeightFn::all_ones(n);
        } else { // psc: weight-0 vertices are the set side
            ci.r = 1;
            ci.weights = inst.weights;
            for (int v = 0; v < n; ++v)
                if (inst.weights.weight(v) == 0) set_side.set(v);
            for (auto [u, v] : g.edges())
                if (set_side.test(u) == set_side.test(v))
                    throw InputError("psc instance is not a set/element incidence graph");
            ci.allowed_centers = set_side;
        }
        auto sol = solve(ci);
        yes = sol.yes;
        record["answer"] = sol.yes ? "YES" : "NO";
        record["witness"] = sol.yes ? one_indexed(sol.witness) : std::vector<int>{};
        record["covered"] = sol.yes ? sol.covered : 0;
        json stats;
        stats["recursive_calls"] = sol.stats.recursive_calls;
        stats["early_exits"] = sol.stats.early_exits;
        stats["greedy_misses"] = sol.stats.greedy_misses;
        stats["widths"] = sol.stats.widths_used;
        stats["dp_max_table"] = sol.stats.dp.max_table;
        record["stats"] = stats;
        if (sol.yes && (ball_weight(g, ci.weights, sol.witness, ci.r) < opt.t ||
                        static_cast<int>(sol.witness.count()) > opt.k))
            throw std::logic_error("witness failed re-verification");
        if (opt.oracle) {
            if (n <= 16) {
                const VertexSet* allowed = ci.allowed_centers ? &*ci.allowed_centers : nullptr;
                oracle_yes = brute_center(g, ci.weights, opt.k, ci.r, opt.t, {}, allowed).feasible;
            } else {
                std::cerr << "oracle skipped: n > 16\n";
            }
        }
    }

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    // timing stays off the record so identical runs stay byte-identical
    std::cerr << opt.problem << " n=" << n << " answer=" << (yes ? "YES" : "NO") << " wall_ms="
              << elapsed.count() << "\n";

    std::cout << record.dump() << "\n";
    if (oracle_yes && *oracle_yes != yes) {
        std::cerr << "oracle mismatch: solver=" << (yes ? "YES" : "NO")
                  << " oracle=" << (*oracle_yes ? "YES" : "NO") << "\n";
        return 3;
    }
    return yes ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial covering solvers (pvc / pds / center / psc)"};
    Options opt;
    app.add_option("--problem", opt.problem, "problem kind")
        ->required()
        ->check(CLI::IsMember({"pvc", "pds", "center", "psc"}));
    app.add_option("--k", opt.k, "solution size budget")->required();
    app.add_option("--t", opt.t, "coverage target")->required();
    auto* ropt = app.add_option("--r", opt.r, "ball radius (center only)");
    auto* copt = app.add_option("--class", opt.klass, "graph class hint (pvc only)")
                     ->check(CLI::IsMember({"bipartite", "trianglefree", "planar", "general"}));
    auto* mopt = app.add_option("--mode", opt.mode, "solver mode (center/pds/psc)")
                     ->check(CLI::IsMember({"general", "planar"}));
    auto* iopt = app.add_option("--input", opt.input, "instance file");
    auto* gopt = app.add_option("--gen", opt.gen, "generator spec");
    app.add_flag("--oracle", opt.oracle, "cross-check against the brute-force oracle");
    app.add_option("--seed", opt.seed, "generator seed");

    try {
        app.parse(argc, argv);
        if (opt.problem == "center") {
            if (!*ropt) throw InputError("--r is required for center");
        } else if (*ropt) {
            throw InputError("--r only applies to center");
        }
        if (*copt && opt.problem != "pvc") throw InputError("--class only applies to pvc");
        if (*mopt && opt.problem == "pvc") throw InputError("--mode does not apply to pvc");
        if (iopt->count() + gopt->count() != 1)
            throw InputError("exactly one of --input / --gen is required");
        if (opt.k < 0 || opt.t < 0 || (opt.problem == "center" && opt.r < 0))
            throw InputError("k, t, r must be nonnegative");
        return run(opt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help is not an error
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
