#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace sc {

// L(G)^t: vertices are base edge ids; two edges conflict when some endpoint
// of one is within distance t-1 of some endpoint of the other. Proper
// colorings of this graph are exactly distance-t edge colorings of the base,
// and t = 2 gives strong edge colorings.
struct ConflictGraph {
    const Graph* base = nullptr;
    int t = 2;
    std::vector<std::vector<uint32_t>> adj;  // sorted conflict-vertex lists
    size_t max_degree = 0;

    size_t num_vertices() const { return adj.size(); }
    bool adjacent(uint32_t e, uint32_t f) const;
};

// Builds L(G)^t by (t-1)-step BFS from each edge's endpoints. Rejects t < 2.
// Memory is O(sum of conflict degrees).
ConflictGraph conflict_graph(const Graph& g, int t);

// Partial coloring of conflict vertices (or plain graph vertices): -1 means
// uncolored.
using Coloring = std::vector<int>;

struct ColoringReport {
    bool valid = true;
    std::vector<std::tuple<uint32_t, uint32_t, int>> violations;  // (u, v, shared color)
    size_t colors_used = 0;
    std::map<int, size_t> class_sizes;
    bool palette_violation = false;  // a color id outside [0, palette)
};

// Proper-coloring check on an explicit adjacency structure.
ColoringReport verify_coloring(const std::vector<std::vector<uint32_t>>& adj,
                               const Coloring& phi,
                               std::optional<int> palette = std::nullopt);
ColoringReport verify_coloring(const Graph& g, const Coloring& phi,
                               std::optional<int> palette = std::nullopt);

// Strong/distance-t edge coloring check on the conflict graph, cross-checked
// against the direct definition: every color class must be a distance-t
// matching in the base graph, verified with fresh BFS distances. Both routes
// are run; a disagreement throws (it would be an internal defect).
ColoringReport verify_coloring(const ConflictGraph& cg, const Coloring& phi,
                               std::optional<int> palette = std::nullopt);

}  // namespace sc
