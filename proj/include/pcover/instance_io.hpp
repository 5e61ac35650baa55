// Instance file format, generators, and the machine-readable result record.
//
// File format (DIMACS-like):
//   c  <comment>
//   p pcover <n> <m>
//   e <u> <v>        1-indexed endpoints, m lines
//   w <v> <0|1>      optional weight overrides; default weight is 1
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pcover/graph.hpp"

namespace pcover {

struct ParsedInstance {
    Graph graph;
    WeightFn weights;
};

ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_string(const std::string& text);
std::string serialize_instance(const Graph& g, const WeightFn& w);

// Spec strings: grid:RxC, path:n, star:n, gnp:n,p, bipartite:a,b,p,
// trianglefree:n,p. Deterministic per seed; class-constrained families are
// verified after generation.
ParsedInstance generate(const std::string& spec, uint64_t seed);

} // namespace pcover
