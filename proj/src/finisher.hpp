#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nibble.hpp"

namespace sc {

struct FinishConfig {
    double ratio_required = 8.0;  // list size vs max color degree; >= 2
    long long resample_cap = 0;   // 0 = 1000 * |residual|
    uint64_t seed = 0;
};

struct FinishStats {
    size_t resamples = 0;
    size_t residual_vertices = 0;
};

struct FinisherPreconditionError : std::runtime_error {
    uint32_t vertex;
    size_t list_size;
    size_t max_color_degree;
    FinisherPreconditionError(uint32_t v, size_t ls, size_t d)
        : std::runtime_error("list/degree ratio violated at vertex " + std::to_string(v) +
                             ": |L|=" + std::to_string(ls) +
                             ", max color degree=" + std::to_string(d)),
          vertex(v), list_size(ls), max_color_degree(d) {}
};

// Moser-Tardos resampling over the residual: draw every uncolored vertex a
// uniform color from its list; while a live edge has equal endpoint colors,
// redraw both endpoints of the lexicographically smallest violated edge.
// Requires |L(v)| >= ratio_required * max_{v,c} t(v,c), with color degrees
// recomputed from the state rather than trusted from the schedule. Writes
// assignments into phi; pure function of (state, cfg).
FinishStats finish_lll(const ListState& ls, const FinishConfig& cfg, PartialColoring& phi);

struct GreedyFailure {
    uint32_t vertex;
    size_t list_size;
    size_t live_degree;
};

// List-greedy completion in decreasing live-degree order (ties to smaller
// id): each vertex takes its smallest list color unused by already-assigned
// live neighbors. Failure is a value: the first stuck vertex. Assignments
// made before the failure are kept in phi.
std::optional<GreedyFailure> finish_greedy(const ListState& ls, PartialColoring& phi);

}  // namespace sc
