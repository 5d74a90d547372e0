#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conflict.hpp"
#include "graph.hpp"

namespace sc {

// Exact solver output. When the node budget runs out, `exact` is false and
// [lower, upper] brackets the optimum. A certificate, when present, passes
// verify_coloring with exactly `value` colors.
struct OracleResult {
    int value = 0;
    int lower = 0;
    int upper = 0;
    bool exact = true;
    Coloring certificate;
    uint64_t nodes_explored = 0;
    double millis = 0;
};

// Branch-and-bound chromatic number: saturation-ordered branching, greedy
// clique lower bound (precolored for symmetry breaking), DSATUR upper bound,
// colors introduced in order. Complete graphs shortcut to n.
OracleResult exact_chromatic_number(const std::vector<std::vector<uint32_t>>& adj,
                                    uint64_t node_budget = 10'000'000);
OracleResult exact_chromatic_number(const Graph& g, uint64_t node_budget = 10'000'000);

// chi(L(G)^t): exact distance-t strong chromatic index.
OracleResult exact_strong_chromatic_index(const Graph& g, int t = 2,
                                          uint64_t node_budget = 10'000'000);

struct ListColoringResult {
    bool sat = false;
    bool exact = true;  // false when the budget ran out before exhaustion
    Coloring certificate;
    uint64_t nodes_explored = 0;
};

// Backtracking list coloring with unit propagation on singleton lists and a
// smallest-list branching order. UNSAT only after exhaustive search.
ListColoringResult exact_list_coloring(const std::vector<std::vector<uint32_t>>& adj,
                                       const std::vector<std::vector<int>>& lists,
                                       uint64_t node_budget = 50'000'000);

enum class Verdict { Yes, No, Unknown };

struct BicliqueResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<Vertex> side_s, side_t;  // witness when verdict == Yes
    uint64_t nodes_explored = 0;
};

// Exhaustive K_{s,t} subgraph search (s-subsets with common neighborhood of
// size >= t). Budget exhaustion gives Unknown.
BicliqueResult contains_biclique(const Graph& g, int s, int t,
                                 uint64_t node_budget = 50'000'000);

}  // namespace sc
