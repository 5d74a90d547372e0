#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace sc {

// Family selector mirrored by the `generate` CLI subcommand.
struct GenSpec {
    std::string family;
    int n = 0, d = 0, a = 0, b = 0, t = 1, girth = 4, q = 2;
    uint64_t seed = 0;
};

// C_n. Rejects n < 3.
Graph gen_cycle(int n);

// C_5 blowup: each vertex becomes an independent t-set, each edge a K_{t,t}.
// 5t vertices, 2t-regular, 5t^2 edges. t = 1 is C_5 itself.
Graph gen_complete_bipartite(int a, int b);
Graph gen_c5_blowup(int t);

// Simple d-regular graph via the configuration model with full restart on
// any self-loop or multi-edge. Deterministic given seed; throws after
// `restart_budget` failed pairings.
Graph gen_random_regular(int n, int d, uint64_t seed, int restart_budget = 10000);

// Point-line incidence graph of PG(2,q): bipartite, 2(q^2+q+1) vertices,
// (q+1)-regular, girth 6, C_4-free. Supported q: 2,3,4,5,7,8,9,11,13,16.
Graph gen_projective_incidence(int q);

struct HighGirthResult {
    Graph graph;
    int deleted_edges = 0;
    bool warned_infeasible = false;
};

// Max degree <= d and girth >= g, built from a random near-d-regular graph
// by deleting one edge from each short cycle (shortest cycle first,
// tie-break smallest edge id). Always succeeds; may return a sparse residue.
HighGirthResult gen_high_girth_regular(int n, int d, int g, uint64_t seed);

Graph generate(const GenSpec& spec);

}  // namespace sc
